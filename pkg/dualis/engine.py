"""
Backward proof search, proof checking and the negation inversion.

Search is propositional only. Two contraction policies are offered:

* implicit-set: sequents are read as sets, a logical rule may keep its
  principal formula, and a branch is pruned as soon as its set-normalised
  sequent repeats an ancestor. Refuted is only claimed once every branch
  closed without touching the depth bound.
* bounded:K: sequents are multisets (or ordered lists when multiset mode is
  off, with interchange applied explicitly) and contraction is an explicit
  backward step, at most K of them per branch.

Whatever the policy, a proof that is found is turned into an ordered
derivation of the calculus itself, with every structural step spelled out.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import ClassVar, Dict, List, Optional, Set, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .calculus import (
    Binding,
    Calculus,
    EigenvariableFresh,
    MatchMode,
    RuleKind,
    RuleSchema,
    Sequent,
    Side,
    instantiate,
    match_conclusion,
    respects_bounds,
    set_side,
    sort_key,
    validate_for_search,
)
from .errors import IncompleteBindingError, NonPropositionalError, NotANegationError
from .formula import Not, Var, occurs_free
from .semantics import sequent_valid
from .structural import Operation, structural_bridge

logger = logging.getLogger(__name__)

IMPLICIT_SET = "implicit-set"
_BOUNDED_RE = re.compile(r"bounded:(\d+)\Z")
_UNREACHED = 1 << 30


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class ProofTree:
    sequent: Sequent
    rule: str
    binding: Binding
    children: Tuple["ProofTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)

    def height(self) -> int:
        return 1 + max((child.height() for child in self.children), default=0)


@dataclass(frozen=True)
class Proved:
    tree: ProofTree
    verdict: ClassVar[str] = "proved"


@dataclass(frozen=True)
class Refuted:
    verdict: ClassVar[str] = "refuted"


@dataclass(frozen=True)
class Unknown:
    bound_exhausted: str
    reason: str = ""
    verdict: ClassVar[str] = "unknown"


SearchResult = Union[Proved, Refuted, Unknown]


class SearchConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    depth_bound: int = Field(64, ge=1)
    multiset_mode: bool = True
    contraction: str = IMPLICIT_SET

    @field_validator("contraction")
    @classmethod
    def _known_policy(cls, value: str) -> str:
        value = value.strip()
        if value != IMPLICIT_SET and not _BOUNDED_RE.match(value):
            raise ValueError("contraction must be 'implicit-set' or 'bounded:K'")
        return value

    @property
    def contraction_budget(self) -> Optional[int]:
        """None under implicit-set, otherwise K."""
        found = _BOUNDED_RE.match(self.contraction)
        return int(found.group(1)) if found else None


@dataclass(frozen=True)
class ProofVerdict:
    valid: bool
    path: Tuple[int, ...] = ()
    reason: str = ""
    kind: Optional[str] = None


VALID = ProofVerdict(True)


# ============================================================
# SEARCH
# ============================================================

@dataclass(frozen=True)
class _Move:
    rule: RuleSchema
    mode: MatchMode
    contraction: bool = False


@dataclass(frozen=True)
class _Step:
    """An inference found by search, before structural steps are added."""
    conclusion: Sequent
    rule: RuleSchema
    binding: Binding
    premises: Tuple[Sequent, ...]
    children: Tuple["_Step", ...]


def _as_set(s: Sequent) -> Sequent:
    return Sequent(set_side(s.antecedent), set_side(s.succedent))


def _as_multiset(s: Sequent) -> Sequent:
    return Sequent(tuple(sorted(s.antecedent, key=sort_key)), tuple(sorted(s.succedent, key=sort_key)))


def _as_list(s: Sequent) -> Sequent:
    return s


class _Search:
    def __init__(self, calculus: Calculus, cfg: SearchConfig):
        self.calculus = calculus
        self.cfg = cfg
        self.bounds = calculus.bounds
        self.budget = cfg.contraction_budget
        self.proved: Dict[Sequent, _Step] = {}
        self.failed: Set[Sequent] = set()
        self.depth_hit = False
        self.budget_hit = False
        self.visited = 0

        axioms = [_Move(r, MatchMode.SET) for r in calculus.rules if r.kind is RuleKind.AXIOM]
        if self.budget is None:
            self.normalize = _as_set
            logical = [_Move(r, MatchMode.SET) for r in calculus.rules if r.kind is RuleKind.LOGICAL]
            self.moves = axioms + logical
            return

        bridge = structural_bridge(calculus)
        mode = MatchMode.MULTISET if cfg.multiset_mode else MatchMode.ORDERED
        self.normalize = _as_multiset if cfg.multiset_mode else _as_list
        logical = [_Move(r, mode) for r in calculus.rules if r.kind is RuleKind.LOGICAL]
        contraction = [_Move(r, mode, True) for r in bridge.rules_of(Operation.CONTRACTION)]
        interchange = [] if cfg.multiset_mode else [_Move(r, MatchMode.ORDERED) for r in bridge.rules_of(Operation.INTERCHANGE)]
        self.moves = axioms + logical + interchange + contraction

    def solve(self, key: Sequent, ancestors: Dict[Sequent, int], depth: int, budget: Optional[int]):
        """Returns (step or None, lowest ancestor depth a loop prune referred to, whether a bound was hit)."""
        if key in self.proved:
            return self.proved[key], _UNREACHED, False
        if key in self.failed:
            return None, _UNREACHED, False
        if key in ancestors:
            return None, ancestors[key], False
        if depth >= self.cfg.depth_bound:
            self.depth_hit = True
            return None, _UNREACHED, True

        self.visited += 1
        ancestors[key] = depth
        low, limited = _UNREACHED, False
        try:
            for move in self.moves:
                bindings = match_conclusion(move.rule, key, self.bounds, move.mode)
                if not bindings:
                    continue
                remaining = budget
                if move.contraction:
                    if budget == 0:
                        self.budget_hit = True
                        limited = True
                        continue
                    remaining = budget - 1
                for binding in bindings:
                    premises, conclusion = instantiate(move.rule, binding)
                    children: List[_Step] = []
                    for premise in premises:
                        child, child_low, child_limited = self.solve(self.normalize(premise), ancestors, depth + 1, remaining)
                        low = min(low, child_low)
                        limited = limited or child_limited
                        if child is None:
                            break
                        children.append(child)
                    else:
                        step = _Step(conclusion, move.rule, binding, premises, tuple(children))
                        self.proved[key] = step
                        return step, _UNREACHED, False
        finally:
            del ancestors[key]

        if not limited and low >= depth:
            self.failed.add(key)
        return None, low, limited


def _reify(calculus: Calculus, concrete: Sequent, step: _Step) -> ProofTree:
    children = tuple(_reify(calculus, p, child) for p, child in zip(step.premises, step.children))
    tree = ProofTree(step.conclusion, step.rule.name, step.binding, children)
    for sequent, rule, binding in reversed(structural_bridge(calculus).plan(concrete, step.conclusion)):
        tree = ProofTree(sequent, rule, binding, (tree,))
    return tree


def search(c: Calculus, goal: Sequent, cfg: Optional[SearchConfig] = None) -> SearchResult:
    cfg = cfg or SearchConfig()
    if not goal.is_propositional():
        raise NonPropositionalError(f"search is propositional only: '{goal}'")
    validate_for_search(c)
    if cfg.contraction_budget is None:
        structural_bridge(c).require_for_sets()

    if not respects_bounds(goal, c.bounds):
        logger.debug("search %s in %s: goal breaks the bounds", goal, c.name)
        return Refuted()

    engine = _Search(c, cfg)
    step, _, _ = engine.solve(engine.normalize(goal), {}, 0, engine.budget)
    if step is not None:
        result: SearchResult = Proved(_reify(c, goal, step))
    elif engine.depth_hit:
        result = Unknown("depth", f"depth bound {cfg.depth_bound} reached")
    elif engine.budget_hit:
        result = Unknown("contraction", f"contraction budget {engine.budget} exhausted")
    else:
        result = Refuted()
    logger.debug("search %s in %s: %s after %d nodes", goal, c.name, result.verdict, engine.visited)
    return result


# ============================================================
# CHECKING
# ============================================================

def _resolve_rule(c: Calculus, name: str) -> Optional[RuleSchema]:
    # only an axiom that mirrors onto itself may be named by its dual,
    # so "axiom" and "axiom°" are interchangeable and "¬L" is not "¬L°"
    from .stahlize import dual_name, mirror_schematic

    rule = c.rule(name)
    if rule is not None:
        return rule
    dual = c.rule(dual_name(name))
    if dual is None or dual.kind is not RuleKind.AXIOM or dual.premises:
        return None
    return dual if mirror_schematic(dual.conclusion) == dual.conclusion else None


def _check_node(c: Calculus, node: ProofTree, path: Tuple[int, ...]) -> ProofVerdict:
    rule = _resolve_rule(c, node.rule)
    if rule is None:
        return ProofVerdict(False, path, f"'{c.name}' has no rule '{node.rule}'", "unknown-rule")
    if len(node.children) != len(rule.premises):
        return ProofVerdict(
            False, path, f"{rule.name} takes {len(rule.premises)} premise(s), node has {len(node.children)}", "arity"
        )
    try:
        premises, conclusion = instantiate(rule, node.binding)
    except IncompleteBindingError as exc:
        return ProofVerdict(False, path, str(exc), "binding")

    if conclusion != node.sequent:
        return ProofVerdict(False, path, f"{rule.name} concludes '{conclusion}', node shows '{node.sequent}'", "instance")
    for i, (premise, child) in enumerate(zip(premises, node.children)):
        if child.sequent != premise:
            return ProofVerdict(
                False, path, f"premise {i} of {rule.name} is '{premise}', child shows '{child.sequent}'", "instance"
            )

    if not respects_bounds(node.sequent, c.bounds):
        return ProofVerdict(False, path, f"'{node.sequent}' breaks the bounds of {c.name}", "bounds")

    for condition in rule.side_conditions:
        term = node.binding.term_map.get(condition.marker)
        if term is None:
            return ProofVerdict(False, path, f"no term bound to '{condition.marker}'", "binding")
        if isinstance(condition, EigenvariableFresh):
            if not isinstance(term, Var):
                return ProofVerdict(False, path, f"eigenvariable '{term}' is not a variable", "eigenvariable")
            if any(occurs_free(term.name, f) for f in node.sequent.formulas()):
                return ProofVerdict(
                    False, path, f"eigenvariable '{term}' occurs free in the conclusion of {rule.name}", "eigenvariable"
                )
    return VALID


def check_proof(c: Calculus, p: ProofTree) -> ProofVerdict:
    stack: List[Tuple[ProofTree, Tuple[int, ...]]] = [(p, ())]
    while stack:
        node, path = stack.pop()
        verdict = _check_node(c, node, path)
        if not verdict.valid:
            return verdict
        stack.extend((child, path + (i,)) for i, child in reversed(list(enumerate(node.children))))
    return VALID


# ============================================================
# NEGATION INVERSION AND THE ORACLE
# ============================================================

def invert_negation(s: Sequent, index: int, side: Side = Side.SUCCEDENT) -> Sequent:
    """Move ¬A at index off its side and append A to the other side."""
    items = side.of(s)
    if not 0 <= index < len(items):
        raise NotANegationError(f"no formula at {side.value} position {index} of '{s}'")
    f = items[index]
    if not isinstance(f, Not):
        raise NotANegationError(f"'{f}' at {side.value} position {index} is not a negation")
    rest = items[:index] + items[index + 1:]
    if side is Side.SUCCEDENT:
        return Sequent(s.antecedent + (f.sub,), rest)
    return Sequent(rest, s.succedent + (f.sub,))


def negation_positions(s: Sequent, side: Side = Side.SUCCEDENT) -> List[int]:
    return [i for i, f in enumerate(side.of(s)) if isinstance(f, Not)]


def decide_classical(s: Sequent) -> bool:
    if not s.is_propositional():
        raise NonPropositionalError(f"'{s}' is not propositional")
    return sequent_valid(s)


# ============================================================
# RENDERING
# ============================================================

def render_proof(p: ProofTree, indent: str = "  ") -> str:
    lines: List[str] = []

    def walk(node: ProofTree, level: int) -> None:
        lines.append(f"{indent * level}{node.sequent}    [{node.rule}]")
        for child in node.children:
            walk(child, level + 1)

    walk(p, 0)
    return "\n".join(lines)
