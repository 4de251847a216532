"""
Exhaustive corpora of small propositional sequents and the agreement run
that compares every calculus with the truth-table oracle.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, field_validator

from .calculus import Sequent, builtin_calculus, normalize_ident, print_sequent
from .config import get_settings
from .engine import Proved, SearchConfig, check_proof, decide_classical, search
from .errors import CorpusBudgetError, FormulaSyntaxError
from .formula import And, Atom, Formula, Imp, Not, Or, parse_sides
from .models import AgreementReport, Disagreement, ReportRow
from .stahlize import mirror_proof, mirror_sequent, stahlize_calculus

logger = logging.getLogger(__name__)

ATOM_NAMES = ("p", "q", "r", "s")
CONNECTIVES = ("not", "and", "or", "imp")
_BINARY = {"and": And, "or": Or, "imp": Imp}

DEFAULT_CALCULI = ("LK", "LJ", "SP", "ANTI_LJ")


class CorpusSpec(BaseModel):
    atom_count: int = Field(2, ge=1)
    max_size: int = Field(1, ge=1)
    templates: List[str] = ["|-A", "A|-"]
    connectives: List[str] = list(CONNECTIVES)

    @field_validator("templates")
    @classmethod
    def _templates_parse(cls, value: List[str]) -> List[str]:
        if not value:
            raise ValueError("at least one template is needed")
        for template in value:
            try:
                antecedent, succedent = parse_sides(template)
            except FormulaSyntaxError as exc:
                raise ValueError(f"template '{template}': {exc}") from None
            if not all(isinstance(f, Atom) for f in antecedent + succedent):
                raise ValueError(f"template '{template}' may only list placeholders")
        return value

    @field_validator("connectives")
    @classmethod
    def _connectives_known(cls, value: List[str]) -> List[str]:
        unknown = sorted(set(value) - set(CONNECTIVES))
        if unknown:
            raise ValueError(f"unknown connective(s): {', '.join(unknown)}")
        return value


def atom_names(count: int) -> List[str]:
    if count <= len(ATOM_NAMES):
        return list(ATOM_NAMES[:count])
    return list(ATOM_NAMES) + [f"p{i}" for i in range(1, count - len(ATOM_NAMES) + 1)]


def count_formulas(spec: CorpusSpec) -> int:
    unary = 1 if "not" in spec.connectives else 0
    binary = sum(1 for c in spec.connectives if c in _BINARY)
    counts = [spec.atom_count]
    for size in range(1, spec.max_size + 1):
        pairs = sum(counts[i] * counts[size - 1 - i] for i in range(size))
        counts.append(unary * counts[size - 1] + binary * pairs)
    return sum(counts)


def _by_size(spec: CorpusSpec) -> List[List[Formula]]:
    levels: List[List[Formula]] = [[Atom(name) for name in atom_names(spec.atom_count)]]
    binaries = [_BINARY[c] for c in CONNECTIVES if c in _BINARY and c in spec.connectives]
    for size in range(1, spec.max_size + 1):
        level: List[Formula] = []
        if "not" in spec.connectives:
            level.extend(Not(f) for f in levels[size - 1])
        for make in binaries:
            for left_size in range(size):
                for lhs in levels[left_size]:
                    for rhs in levels[size - 1 - left_size]:
                        level.append(make(lhs, rhs))
        levels.append(level)
    return levels


def enumerate_formulas(spec: CorpusSpec, budget: Optional[int] = None) -> List[Formula]:
    budget = budget or get_settings().corpus_budget
    total = count_formulas(spec)
    if total > budget:
        raise CorpusBudgetError(total, budget)
    return [f for level in _by_size(spec) for f in level]


def _placeholders(template: str) -> List[str]:
    antecedent, succedent = parse_sides(template)
    return list(dict.fromkeys(f.name for f in antecedent + succedent))


def _fill(template: str, mapping: Dict[str, Formula]) -> Sequent:
    antecedent, succedent = parse_sides(template)
    return Sequent(tuple(mapping[f.name] for f in antecedent), tuple(mapping[f.name] for f in succedent))


def count_sequents(spec: CorpusSpec) -> int:
    formulas = count_formulas(spec)
    return sum(formulas ** len(_placeholders(t)) for t in spec.templates)


def enumerate_sequents(spec: CorpusSpec, budget: Optional[int] = None) -> Iterator[Sequent]:
    budget = budget or get_settings().corpus_budget
    total = count_sequents(spec)
    if total > budget:
        raise CorpusBudgetError(total, budget)
    formulas = enumerate_formulas(spec, budget)
    for template in spec.templates:
        names = _placeholders(template)
        for chosen in product(formulas, repeat=len(names)):
            yield _fill(template, dict(zip(names, chosen)))


# ============================================================
# AGREEMENT
# ============================================================

def _expectation(ident: str, valid: bool, mirror_valid: bool) -> Tuple[Optional[bool], str]:
    """(required outcome or None when only 'proved implies X' holds, description)."""
    if ident == "LK":
        return valid, "proved iff classically valid"
    if ident in ("SP", "SC"):
        return mirror_valid, "proved iff the mirror is classically valid"
    if ident == "LJ":
        return (None if valid else False), "proved only if classically valid"
    if ident == "ANTI_LJ":
        return (None if mirror_valid else False), "proved only if the mirror is classically valid"
    return None, "no expectation"


def _evaluate(job: Tuple[Sequent, Tuple[str, ...], SearchConfig, bool]) -> Tuple[ReportRow, List[Disagreement]]:
    s, idents, cfg, check = job
    text = print_sequent(s)
    valid = decide_classical(s)
    mirror_valid = decide_classical(mirror_sequent(s))
    verdicts: Dict[str, str] = {}
    problems: List[Disagreement] = []

    for ident in idents:
        calculus = builtin_calculus(ident)
        result = search(calculus, s, cfg)
        verdicts[ident] = result.verdict
        required, description = _expectation(ident, valid, mirror_valid)
        proved = isinstance(result, Proved)
        if result.verdict == "unknown" or (required is not None and proved != required):
            problems.append(Disagreement(sequent=text, calculus=ident, verdict=result.verdict, expected=description))
        if check and proved:
            verdict = check_proof(calculus, result.tree)
            if verdict.valid:
                verdict = check_proof(stahlize_calculus(calculus), mirror_proof(result.tree))
            if not verdict.valid:
                problems.append(
                    Disagreement(
                        sequent=text, calculus=ident, verdict=f"proof rejected ({verdict.kind})", expected=verdict.reason
                    )
                )

    return ReportRow(sequent=text, valid=valid, mirror_valid=mirror_valid, verdicts=verdicts), problems


def _witnesses(rows: Sequence[ReportRow], idents: Sequence[str]) -> Dict[str, Optional[str]]:
    def first(predicate) -> Optional[str]:
        return next((row.sequent for row in rows if predicate(row)), None)

    found: Dict[str, Optional[str]] = {}
    for weaker, stronger in (("LJ", "LK"), ("ANTI_LJ", "SP")):
        if weaker in idents and stronger in idents:
            found[f"{weaker} < {stronger}"] = first(
                lambda row: row.verdicts[stronger] == "proved" and row.verdicts[weaker] == "refuted"
            )
    for ident in idents:
        found[f"underivable in {ident}"] = first(lambda row: row.verdicts[ident] == "refuted")
    return found


def run_agreement(
    spec: CorpusSpec,
    calculi: Sequence[str] = DEFAULT_CALCULI,
    cfg: Optional[SearchConfig] = None,
    jobs: int = 1,
    check_proofs: bool = True,
    budget: Optional[int] = None,
) -> AgreementReport:
    cfg = cfg or SearchConfig()
    idents = tuple(normalize_ident(i) for i in calculi)
    for ident in idents:
        builtin_calculus(ident)
    sequents = list(enumerate_sequents(spec, budget))
    logger.info("agreement run over %d sequents for %s", len(sequents), ", ".join(idents))

    work = [(s, idents, cfg, check_proofs) for s in sequents]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_evaluate, work, chunksize=64))
    else:
        outcomes = []
        for n, job in enumerate(work, 1):
            outcomes.append(_evaluate(job))
            if n % 500 == 0:
                logger.info("%d/%d sequents done", n, len(work))

    rows = [row for row, _ in outcomes]
    disagreements = [d for _, found in outcomes for d in found]
    summary: Dict[str, Dict[str, int]] = {
        "oracle": {
            "rows": len(rows),
            "valid": sum(row.valid for row in rows),
            "mirror_valid": sum(row.mirror_valid for row in rows),
        }
    }
    for ident in idents:
        tally = {"proved": 0, "refuted": 0, "unknown": 0}
        for row in rows:
            tally[row.verdicts[ident]] += 1
        summary[ident] = tally
    summary["disagreements"] = {"total": len(disagreements)}

    return AgreementReport(
        spec=spec.model_dump(),
        calculi=list(idents),
        rows=rows,
        summary=summary,
        disagreements=disagreements,
        witnesses=_witnesses(rows, idents),
    )
