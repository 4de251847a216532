"""
JSON documents: calculi, proofs and agreement reports.

Formulas and terms travel as canonical printed strings. Documents are
dumped with sorted keys so that loading and dumping a canonical document
reproduces it byte for byte.
"""
import json
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from .calculus import (
    Binding,
    Calculus,
    Connective,
    CtxVar,
    EigenvariableFresh,
    FormulaVar,
    Pattern,
    RuleKind,
    RuleSchema,
    SchemaItem,
    SchematicSequent,
    Sequent,
    TermInstance,
)
from .engine import ProofTree
from .errors import CalculusFormatError, DualisError, ProofFormatError
from .formula import parse_formula, parse_term, print_formula, print_term

CALCULUS_FORMAT = "dualis.calculus"
PROOF_FORMAT = "dualis.proof"
REPORT_FORMAT = "dualis.report"


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), sort_keys=True, ensure_ascii=False, indent=2) + "\n"


# ============================================================
# CALCULUS DOCUMENTS
# ============================================================

class CtxItem(BaseModel):
    kind: Literal["ctx"] = "ctx"
    name: str


class FormulaVarItem(BaseModel):
    kind: Literal["fvar"] = "fvar"
    name: str


class PatternItem(BaseModel):
    kind: Literal["pattern"] = "pattern"
    connective: Connective
    operands: List[str]
    binder: Optional[str] = None
    term: Optional[str] = None


Item = Annotated[Union[CtxItem, FormulaVarItem, PatternItem], Field(discriminator="kind")]


class SchematicSequentModel(BaseModel):
    ant: List[Item] = []
    suc: List[Item] = []


class SideConditionModel(BaseModel):
    kind: Literal["eigenvariable", "term"]
    marker: str


class RuleModel(BaseModel):
    name: str
    kind: RuleKind = RuleKind.LOGICAL
    premises: List[SchematicSequentModel] = []
    conclusion: SchematicSequentModel
    side_conditions: List[SideConditionModel] = []


class CalculusDocument(BaseModel):
    format: Literal["dualis.calculus"] = CALCULUS_FORMAT
    version: Literal[1] = 1
    name: str
    rules: List[RuleModel]
    antecedent_bound: Optional[int] = Field(None, ge=0)
    succedent_bound: Optional[int] = Field(None, ge=0)

    @classmethod
    def from_calculus(cls, c: Calculus) -> "CalculusDocument":
        return cls(
            name=c.name,
            rules=[_rule_model(r) for r in c.rules],
            antecedent_bound=c.antecedent_bound,
            succedent_bound=c.succedent_bound,
        )

    def to_calculus(self) -> Calculus:
        rules = [
            RuleSchema(
                name=r.name,
                premises=tuple(_schematic(p) for p in r.premises),
                conclusion=_schematic(r.conclusion),
                side_conditions=tuple(
                    EigenvariableFresh(s.marker) if s.kind == "eigenvariable" else TermInstance(s.marker)
                    for s in r.side_conditions
                ),
                kind=r.kind,
            )
            for r in self.rules
        ]
        return Calculus(self.name, tuple(rules), self.antecedent_bound, self.succedent_bound)


def _item_model(item: SchemaItem):
    if isinstance(item, CtxVar):
        return CtxItem(name=item.name)
    if isinstance(item, FormulaVar):
        return FormulaVarItem(name=item.name)
    return PatternItem(connective=item.connective, operands=list(item.operands), binder=item.binder, term=item.term)


def _item(model) -> SchemaItem:
    if isinstance(model, CtxItem):
        return CtxVar(model.name)
    if isinstance(model, FormulaVarItem):
        return FormulaVar(model.name)
    return Pattern(model.connective, tuple(model.operands), model.binder, model.term)


def _schematic_model(s: SchematicSequent) -> SchematicSequentModel:
    return SchematicSequentModel(ant=[_item_model(i) for i in s.antecedent], suc=[_item_model(i) for i in s.succedent])


def _schematic(m: SchematicSequentModel) -> SchematicSequent:
    return SchematicSequent(tuple(_item(i) for i in m.ant), tuple(_item(i) for i in m.suc))


def _rule_model(r: RuleSchema) -> RuleModel:
    return RuleModel(
        name=r.name,
        kind=r.kind,
        premises=[_schematic_model(p) for p in r.premises],
        conclusion=_schematic_model(r.conclusion),
        side_conditions=[
            SideConditionModel(kind="eigenvariable" if isinstance(s, EigenvariableFresh) else "term", marker=s.marker)
            for s in r.side_conditions
        ],
    )


def dump_calculus(c: Calculus) -> str:
    return dump_json(CalculusDocument.from_calculus(c))


def load_calculus(text: Union[str, bytes, Dict[str, Any]]) -> Calculus:
    try:
        data = json.loads(text) if isinstance(text, (str, bytes)) else text
        return CalculusDocument.model_validate(data).to_calculus()
    except (ValueError, ValidationError) as exc:
        raise CalculusFormatError(f"not a calculus document: {exc}") from None
    except DualisError as exc:
        raise CalculusFormatError(str(exc)) from None


# ============================================================
# PROOF DOCUMENTS
# ============================================================

class SequentModel(BaseModel):
    ant: List[str] = []
    suc: List[str] = []


class BindingModel(BaseModel):
    contexts: Dict[str, List[str]] = {}
    formulas: Dict[str, str] = {}
    terms: Dict[str, str] = {}


class ProofNodeModel(BaseModel):
    sequent: SequentModel
    rule: str
    binding: BindingModel = BindingModel()
    children: List["ProofNodeModel"] = []


class ProofDocument(BaseModel):
    format: Literal["dualis.proof"] = PROOF_FORMAT
    version: Literal[1] = 1
    calculus: str
    root: ProofNodeModel

    @classmethod
    def from_proof(cls, calculus: str, p: ProofTree) -> "ProofDocument":
        return cls(calculus=calculus, root=_node_model(p))

    def to_proof(self) -> ProofTree:
        return _node(self.root)


def _node_model(p: ProofTree) -> ProofNodeModel:
    b = p.binding
    return ProofNodeModel(
        sequent=SequentModel(
            ant=[print_formula(f) for f in p.sequent.antecedent],
            suc=[print_formula(f) for f in p.sequent.succedent],
        ),
        rule=p.rule,
        binding=BindingModel(
            contexts={k: [print_formula(f) for f in v] for k, v in b.contexts},
            formulas={k: print_formula(f) for k, f in b.formulas},
            terms={k: print_term(t) for k, t in b.terms},
        ),
        children=[_node_model(child) for child in p.children],
    )


def _node(m: ProofNodeModel) -> ProofTree:
    return ProofTree(
        sequent=Sequent(tuple(parse_formula(f) for f in m.sequent.ant), tuple(parse_formula(f) for f in m.sequent.suc)),
        rule=m.rule,
        binding=Binding.of(
            contexts={k: [parse_formula(f) for f in v] for k, v in m.binding.contexts.items()},
            formulas={k: parse_formula(f) for k, f in m.binding.formulas.items()},
            terms={k: parse_term(t) for k, t in m.binding.terms.items()},
        ),
        children=tuple(_node(child) for child in m.children),
    )


def dump_proof(calculus: str, p: ProofTree) -> str:
    return dump_json(ProofDocument.from_proof(calculus, p))


def load_proof_document(text: Union[str, bytes, Dict[str, Any]]) -> ProofDocument:
    try:
        data = json.loads(text) if isinstance(text, (str, bytes)) else text
        return ProofDocument.model_validate(data)
    except (ValueError, ValidationError) as exc:
        raise ProofFormatError(f"not a proof document: {exc}") from None


def load_proof(text: Union[str, bytes, Dict[str, Any]]) -> ProofTree:
    document = load_proof_document(text)
    try:
        return document.to_proof()
    except DualisError as exc:
        raise ProofFormatError(str(exc)) from None


# ============================================================
# REPORTS
# ============================================================

class ReportRow(BaseModel):
    sequent: str
    valid: bool
    mirror_valid: bool
    verdicts: Dict[str, str]


class Disagreement(BaseModel):
    sequent: str
    calculus: str
    verdict: str
    expected: str


class AgreementReport(BaseModel):
    spec: Dict[str, Any]
    calculi: List[str]
    rows: List[ReportRow] = []
    summary: Dict[str, Dict[str, int]] = {}
    disagreements: List[Disagreement] = []
    witnesses: Dict[str, Optional[str]] = {}

    @property
    def passed(self) -> bool:
        return not self.disagreements


class ReportDocument(AgreementReport):
    format: Literal["dualis.report"] = REPORT_FORMAT
    version: Literal[1] = 1
    generated_at: str
