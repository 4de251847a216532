"""
Sequents, schematic sequents, rule schemas and calculi.

A calculus is data: a list of rule schemas over context metavariables
(Γ, Δ, Θ, Λ), formula metavariables (A, B) and patterns built from them,
plus optional bounds on the length of either side. The built-in LK follows
Gentzen's formulation with explicit structural rules; LJ is LK restricted to
at most one succedent formula.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import IncompleteBindingError, MalformedCalculusError, UnknownCalculusError
from .formula import (
    And,
    Exists,
    Forall,
    Formula,
    Imp,
    Not,
    Or,
    Term,
    Var,
    atoms,
    is_propositional,
    parse_sides,
    print_formula,
    substitute,
)

logger = logging.getLogger(__name__)


# ============================================================
# CONCRETE SEQUENTS
# ============================================================

@dataclass(frozen=True)
class Sequent:
    antecedent: Tuple[Formula, ...] = ()
    succedent: Tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "succedent", tuple(self.succedent))

    def __str__(self) -> str:
        return print_sequent(self)

    def formulas(self) -> Tuple[Formula, ...]:
        return self.antecedent + self.succedent

    def is_propositional(self) -> bool:
        return all(is_propositional(f) for f in self.formulas())

    def atoms(self) -> FrozenSet[str]:
        found: FrozenSet[str] = frozenset()
        for f in self.formulas():
            found |= atoms(f)
        return found


def parse_sequent(text: str) -> Sequent:
    antecedent, succedent = parse_sides(text)
    return Sequent(antecedent, succedent)


def print_sequent(s: Sequent) -> str:
    left = ", ".join(print_formula(f) for f in s.antecedent)
    right = ", ".join(print_formula(f) for f in s.succedent)
    text = f"{left} |-" if left else "|-"
    return f"{text} {right}" if right else text


class Side(str, Enum):
    ANTECEDENT = "antecedent"
    SUCCEDENT = "succedent"

    @property
    def other(self) -> "Side":
        return Side.SUCCEDENT if self is Side.ANTECEDENT else Side.ANTECEDENT

    def of(self, s) -> tuple:
        """The list on this side of a concrete or schematic sequent."""
        return s.antecedent if self is Side.ANTECEDENT else s.succedent


class Bounds(NamedTuple):
    antecedent: Optional[int] = None
    succedent: Optional[int] = None


NO_BOUNDS = Bounds()


def respects_bounds(s: Sequent, bounds: Bounds) -> bool:
    if bounds.antecedent is not None and len(s.antecedent) > bounds.antecedent:
        return False
    if bounds.succedent is not None and len(s.succedent) > bounds.succedent:
        return False
    return True


# ============================================================
# SCHEMAS
# ============================================================

@dataclass(frozen=True)
class CtxVar:
    name: str


@dataclass(frozen=True)
class FormulaVar:
    name: str


class Connective(str, Enum):
    NOT = "not"
    AND = "and"
    OR = "or"
    IMP = "imp"
    FORALL = "forall"
    EXISTS = "exists"
    SUBST = "subst"


_ARITY = {
    Connective.NOT: 1,
    Connective.AND: 2,
    Connective.OR: 2,
    Connective.IMP: 2,
    Connective.FORALL: 1,
    Connective.EXISTS: 1,
    Connective.SUBST: 1,
}

_BINARY_TYPES = {Connective.AND: And, Connective.OR: Or, Connective.IMP: Imp}
_QUANTIFIER_TYPES = {Connective.FORALL: Forall, Connective.EXISTS: Exists}


@dataclass(frozen=True)
class Pattern:
    """A connective over formula metavariables; SUBST stands for A[t/x]."""
    connective: Connective
    operands: Tuple[str, ...]
    binder: Optional[str] = None
    term: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "connective", Connective(self.connective))
        object.__setattr__(self, "operands", tuple(self.operands))
        if len(self.operands) != _ARITY[self.connective]:
            raise MalformedCalculusError(f"pattern '{self.connective.value}' takes {_ARITY[self.connective]} operand(s)")
        needs_binder = self.connective in _QUANTIFIER_TYPES or self.connective is Connective.SUBST
        if needs_binder != (self.binder is not None):
            raise MalformedCalculusError(f"pattern '{self.connective.value}' binder mismatch")
        if (self.connective is Connective.SUBST) != (self.term is not None):
            raise MalformedCalculusError(f"pattern '{self.connective.value}' term marker mismatch")


SchemaItem = Union[CtxVar, FormulaVar, Pattern]


@dataclass(frozen=True)
class SchematicSequent:
    antecedent: Tuple[SchemaItem, ...] = ()
    succedent: Tuple[SchemaItem, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "antecedent", tuple(self.antecedent))
        object.__setattr__(self, "succedent", tuple(self.succedent))

    def items(self) -> Tuple[SchemaItem, ...]:
        return self.antecedent + self.succedent


@dataclass(frozen=True)
class EigenvariableFresh:
    marker: str


@dataclass(frozen=True)
class TermInstance:
    marker: str


SideCondition = Union[EigenvariableFresh, TermInstance]


class RuleKind(str, Enum):
    AXIOM = "axiom"
    STRUCTURAL = "structural"
    LOGICAL = "logical"
    CUT = "cut"


@dataclass(frozen=True)
class RuleSchema:
    name: str
    premises: Tuple[SchematicSequent, ...]
    conclusion: SchematicSequent
    side_conditions: Tuple[SideCondition, ...] = ()
    kind: RuleKind = RuleKind.LOGICAL

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        object.__setattr__(self, "side_conditions", tuple(self.side_conditions))
        object.__setattr__(self, "kind", RuleKind(self.kind))

    @property
    def is_axiom(self) -> bool:
        return not self.premises

    @property
    def checker_only(self) -> bool:
        return self.kind is RuleKind.CUT

    @property
    def markers(self) -> FrozenSet[str]:
        return frozenset(c.marker for c in self.side_conditions)


@dataclass(frozen=True)
class Calculus:
    name: str
    rules: Tuple[RuleSchema, ...]
    antecedent_bound: Optional[int] = None
    succedent_bound: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        names = Counter(r.name for r in self.rules)
        duplicated = sorted(n for n, k in names.items() if k > 1)
        if duplicated:
            raise MalformedCalculusError(f"calculus '{self.name}' repeats rule names: {', '.join(duplicated)}")
        for bound in (self.antecedent_bound, self.succedent_bound):
            if bound is not None and bound < 0:
                raise MalformedCalculusError("bounds must be natural numbers")

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.antecedent_bound, self.succedent_bound)

    @cached_property
    def _by_name(self) -> Dict[str, RuleSchema]:
        return {r.name: r for r in self.rules}

    def rule(self, name: str) -> Optional[RuleSchema]:
        return self._by_name.get(name)


# ============================================================
# BINDINGS AND INSTANTIATION
# ============================================================

@dataclass(frozen=True)
class Binding:
    contexts: Tuple[Tuple[str, Tuple[Formula, ...]], ...] = ()
    formulas: Tuple[Tuple[str, Formula], ...] = ()
    terms: Tuple[Tuple[str, Term], ...] = ()

    @classmethod
    def of(
        cls,
        contexts: Optional[Dict[str, Sequence[Formula]]] = None,
        formulas: Optional[Dict[str, Formula]] = None,
        terms: Optional[Dict[str, Term]] = None,
    ) -> "Binding":
        return cls(
            tuple(sorted((k, tuple(v)) for k, v in (contexts or {}).items())),
            tuple(sorted((formulas or {}).items(), key=lambda kv: kv[0])),
            tuple(sorted((terms or {}).items(), key=lambda kv: kv[0])),
        )

    @cached_property
    def context_map(self) -> Dict[str, Tuple[Formula, ...]]:
        return dict(self.contexts)

    @cached_property
    def formula_map(self) -> Dict[str, Formula]:
        return dict(self.formulas)

    @cached_property
    def term_map(self) -> Dict[str, Term]:
        return dict(self.terms)


def _instantiate_item(item: SchemaItem, b: Binding, rule: str) -> Tuple[Formula, ...]:
    if isinstance(item, CtxVar):
        if item.name not in b.context_map:
            raise IncompleteBindingError(rule, item.name)
        return b.context_map[item.name]

    def formula(name: str) -> Formula:
        if name not in b.formula_map:
            raise IncompleteBindingError(rule, name)
        return b.formula_map[name]

    def term(name: str) -> Term:
        if name not in b.term_map:
            raise IncompleteBindingError(rule, name)
        return b.term_map[name]

    if isinstance(item, FormulaVar):
        return (formula(item.name),)

    c = item.connective
    if c is Connective.NOT:
        return (Not(formula(item.operands[0])),)
    if c in _BINARY_TYPES:
        return (_BINARY_TYPES[c](formula(item.operands[0]), formula(item.operands[1])),)
    binder = term(item.binder)
    if not isinstance(binder, Var):
        raise IncompleteBindingError(rule, item.binder)
    if c in _QUANTIFIER_TYPES:
        return (_QUANTIFIER_TYPES[c](binder.name, formula(item.operands[0])),)
    return (substitute(formula(item.operands[0]), binder.name, term(item.term)),)


def instantiate_schematic(s: SchematicSequent, b: Binding, rule: str = "?") -> Sequent:
    antecedent: List[Formula] = []
    succedent: List[Formula] = []
    for item in s.antecedent:
        antecedent.extend(_instantiate_item(item, b, rule))
    for item in s.succedent:
        succedent.extend(_instantiate_item(item, b, rule))
    return Sequent(tuple(antecedent), tuple(succedent))


def instantiate(rule: RuleSchema, b: Binding) -> Tuple[Tuple[Sequent, ...], Sequent]:
    premises = tuple(instantiate_schematic(p, b, rule.name) for p in rule.premises)
    return premises, instantiate_schematic(rule.conclusion, b, rule.name)


# ============================================================
# MATCHING
# ============================================================

class MatchMode(str, Enum):
    ORDERED = "ordered"
    MULTISET = "multiset"
    # each side of the instantiated conclusion is, as a set, contained in the
    # goal side; the difference is made up by structural rules
    SET = "set"


class _Env:
    __slots__ = ("contexts", "formulas", "terms")

    def __init__(self, contexts=None, formulas=None, terms=None):
        self.contexts: Dict[str, Tuple[Formula, ...]] = contexts or {}
        self.formulas: Dict[str, Formula] = formulas or {}
        self.terms: Dict[str, Term] = terms or {}

    def with_context(self, name: str, value: Tuple[Formula, ...]) -> "_Env":
        contexts = dict(self.contexts)
        contexts[name] = tuple(value)
        return _Env(contexts, self.formulas, self.terms)

    def with_formula(self, name: str, f: Formula) -> Optional["_Env"]:
        if name in self.formulas:
            return self if self.formulas[name] == f else None
        formulas = dict(self.formulas)
        formulas[name] = f
        return _Env(self.contexts, formulas, self.terms)

    def with_term(self, name: str, t: Term) -> Optional["_Env"]:
        if name in self.terms:
            return self if self.terms[name] == t else None
        terms = dict(self.terms)
        terms[name] = t
        return _Env(self.contexts, self.formulas, terms)

    def freeze(self) -> Binding:
        return Binding.of(self.contexts, self.formulas, self.terms)


def _unify(item: SchemaItem, f: Formula, env: _Env) -> Optional[_Env]:
    if isinstance(item, FormulaVar):
        return env.with_formula(item.name, f)
    c = item.connective
    if c is Connective.NOT:
        return env.with_formula(item.operands[0], f.sub) if isinstance(f, Not) else None
    if c in _BINARY_TYPES:
        if type(f) is not _BINARY_TYPES[c]:
            return None
        env = env.with_formula(item.operands[0], f.lhs)
        return env.with_formula(item.operands[1], f.rhs) if env is not None else None
    if c in _QUANTIFIER_TYPES:
        if type(f) is not _QUANTIFIER_TYPES[c]:
            return None
        env = env.with_term(item.binder, Var(f.var))
        return env.with_formula(item.operands[0], f.body) if env is not None else None
    # an instance pattern only matches once everything in it is known
    needed = (item.operands[0] in env.formulas, item.binder in env.terms, item.term in env.terms)
    if not all(needed):
        return None
    try:
        (expected,) = _instantiate_item(item, env.freeze(), "?")
    except IncompleteBindingError:
        return None
    return env if expected == f else None


def _match_ordered(items: Sequence[SchemaItem], formulas: Sequence[Formula], env: _Env) -> Iterator[_Env]:
    if not items:
        if not formulas:
            yield env
        return
    head, rest = items[0], items[1:]
    if isinstance(head, CtxVar):
        if head.name in env.contexts:
            value = env.contexts[head.name]
            if tuple(formulas[: len(value)]) == value:
                yield from _match_ordered(rest, formulas[len(value):], env)
            return
        for cut in range(len(formulas) + 1):
            yield from _match_ordered(rest, formulas[cut:], env.with_context(head.name, tuple(formulas[:cut])))
        return
    if formulas:
        extended = _unify(head, formulas[0], env)
        if extended is not None:
            yield from _match_ordered(rest, formulas[1:], extended)


def _remove_multiset(pool: Sequence[Formula], taken: Sequence[Formula]) -> Optional[Tuple[Formula, ...]]:
    remaining = list(pool)
    for f in taken:
        if f not in remaining:
            return None
        remaining.remove(f)
    return tuple(remaining)


def _distribute(contexts: Sequence[str], rest: Tuple[Formula, ...], env: _Env) -> Iterator[_Env]:
    if not contexts:
        if not rest:
            yield env
        return
    name, others = contexts[0], contexts[1:]
    if name in env.contexts:
        remaining = _remove_multiset(rest, env.contexts[name])
        if remaining is not None:
            yield from _distribute(others, remaining, env)
        return
    if not others:
        yield env.with_context(name, rest)
        return
    for mask in product((True, False), repeat=len(rest)):
        taken = tuple(f for f, keep in zip(rest, mask) if keep)
        left = tuple(f for f, keep in zip(rest, mask) if not keep)
        yield from _distribute(others, left, env.with_context(name, taken))


def _match_multiset(items: Sequence[SchemaItem], formulas: Sequence[Formula], env: _Env) -> Iterator[_Env]:
    fixed = [i for i in items if not isinstance(i, CtxVar)]
    contexts = [i.name for i in items if isinstance(i, CtxVar)]
    for picks in permutations(range(len(formulas)), len(fixed)):
        current: Optional[_Env] = env
        for item, index in zip(fixed, picks):
            current = _unify(item, formulas[index], current)
            if current is None:
                break
        if current is None:
            continue
        chosen = set(picks)
        rest = tuple(f for i, f in enumerate(formulas) if i not in chosen)
        yield from _distribute(contexts, rest, current)


def _context_options(formulas: Tuple[Formula, ...], bound: Optional[int]) -> List[Tuple[Formula, ...]]:
    if bound is None:
        return [formulas]
    options: List[Tuple[Formula, ...]] = []
    for size in range(min(bound, len(formulas)), -1, -1):
        options.extend(combinations(formulas, size))
    return options


def _match_set(
    items: Sequence[SchemaItem], formulas: Tuple[Formula, ...], env: _Env, bound: Optional[int]
) -> Iterator[_Env]:
    fixed = [i for i in items if not isinstance(i, CtxVar)]
    contexts = list(dict.fromkeys(i.name for i in items if isinstance(i, CtxVar)))
    members = set(formulas)

    def assign_fixed(index: int, current: _Env) -> Iterator[_Env]:
        if index == len(fixed):
            yield current
            return
        for f in formulas:
            extended = _unify(fixed[index], f, current)
            if extended is not None:
                yield from assign_fixed(index + 1, extended)

    def assign_contexts(index: int, current: _Env) -> Iterator[_Env]:
        if index == len(contexts):
            yield current
            return
        name = contexts[index]
        if name in current.contexts:
            if all(f in members for f in current.contexts[name]):
                yield from assign_contexts(index + 1, current)
            return
        for option in _context_options(formulas, bound):
            yield from assign_contexts(index + 1, current.with_context(name, option))

    for env_fixed in assign_fixed(0, env):
        yield from assign_contexts(0, env_fixed)


def sort_key(f: Formula) -> str:
    return print_formula(f)


def set_side(formulas: Sequence[Formula]) -> Tuple[Formula, ...]:
    """Distinct formulas of a side in canonical order."""
    return tuple(sorted(set(formulas), key=sort_key))


def _within_bounds(rule: RuleSchema, b: Binding, bounds: Bounds) -> bool:
    if bounds == NO_BOUNDS:
        return True
    for schematic in (rule.conclusion, *rule.premises):
        try:
            concrete = instantiate_schematic(schematic, b, rule.name)
        except IncompleteBindingError:
            # metavariables that only premises mention are chosen by the proof
            continue
        if not respects_bounds(concrete, bounds):
            return False
    return True


def match_conclusion(
    rule: RuleSchema,
    goal: Sequent,
    bounds: Bounds = NO_BOUNDS,
    mode: MatchMode = MatchMode.ORDERED,
) -> Tuple[Binding, ...]:
    """All bindings that instantiate the rule's conclusion to the goal under the given mode."""
    conclusion = rule.conclusion
    if mode is MatchMode.ORDERED:
        left = _match_ordered(conclusion.antecedent, goal.antecedent, _Env())
        right = lambda env: _match_ordered(conclusion.succedent, goal.succedent, env)
    elif mode is MatchMode.MULTISET:
        left = _match_multiset(conclusion.antecedent, goal.antecedent, _Env())
        right = lambda env: _match_multiset(conclusion.succedent, goal.succedent, env)
    else:
        ant, suc = set_side(goal.antecedent), set_side(goal.succedent)
        left = _match_set(conclusion.antecedent, ant, _Env(), bounds.antecedent)
        right = lambda env: _match_set(conclusion.succedent, suc, env, bounds.succedent)

    found: List[Binding] = []
    seen = set()
    for env in left:
        for full in right(env):
            binding = full.freeze()
            if binding in seen:
                continue
            seen.add(binding)
            if _within_bounds(rule, binding, bounds):
                found.append(binding)
    return tuple(found)


# ============================================================
# STATIC CHECKS
# ============================================================

def _metavariables(s: SchematicSequent) -> FrozenSet[str]:
    names = set()
    for item in s.items():
        if isinstance(item, (CtxVar, FormulaVar)):
            names.add(item.name)
        else:
            names.update(item.operands)
            names.update(n for n in (item.binder, item.term) if n is not None)
    return frozenset(names)


def bound_violations(calculus: Calculus) -> List[str]:
    """Schemas whose fixed items alone already exceed a bound."""
    problems: List[str] = []
    for rule in calculus.rules:
        for schematic in (*rule.premises, rule.conclusion):
            for side, items, bound in (
                ("antecedent", schematic.antecedent, calculus.antecedent_bound),
                ("succedent", schematic.succedent, calculus.succedent_bound),
            ):
                fixed = sum(1 for i in items if not isinstance(i, CtxVar))
                if bound is not None and fixed > bound:
                    problems.append(f"{rule.name}: {side} needs {fixed} formulas, bound is {bound}")
    return problems


def validate_for_search(calculus: Calculus) -> None:
    for rule in calculus.rules:
        if rule.checker_only:
            continue
        known = _metavariables(rule.conclusion) | rule.markers
        for premise in rule.premises:
            missing = _metavariables(premise) - known
            if missing:
                raise MalformedCalculusError(
                    f"rule '{rule.name}' of '{calculus.name}': premise metavariable(s) "
                    f"{', '.join(sorted(missing))} cannot be inferred from the conclusion"
                )


# ============================================================
# RENDERING
# ============================================================

_SYMBOLS = {Connective.AND: "∧", Connective.OR: "∨", Connective.IMP: "⊃"}


def render_item(item: SchemaItem) -> str:
    if isinstance(item, (CtxVar, FormulaVar)):
        return item.name
    c, ops = item.connective, item.operands
    if c is Connective.NOT:
        return f"¬{ops[0]}"
    if c in _SYMBOLS:
        return f"{ops[0]}{_SYMBOLS[c]}{ops[1]}"
    if c is Connective.FORALL:
        return f"∀{item.binder}{ops[0]}"
    if c is Connective.EXISTS:
        return f"∃{item.binder}{ops[0]}"
    return f"{ops[0]}[{item.term}/{item.binder}]"


def render_schematic(s: SchematicSequent) -> str:
    left = ",".join(render_item(i) for i in s.antecedent)
    right = ",".join(render_item(i) for i in s.succedent)
    return f"{left} ⊢ {right}".strip()


def render_rule(rule: RuleSchema) -> str:
    text = f"{rule.name}: "
    if rule.premises:
        text += " ; ".join(render_schematic(p) for p in rule.premises) + " / "
    text += render_schematic(rule.conclusion)
    notes = [
        f"eigenvariable {c.marker}" if isinstance(c, EigenvariableFresh) else f"term {c.marker}"
        for c in rule.side_conditions
    ]
    if rule.checker_only:
        notes.append("checker only")
    if notes:
        text += "   {" + "; ".join(notes) + "}"
    return text


def render_bounds(calculus: Calculus) -> str:
    parts = []
    if calculus.antecedent_bound is not None:
        parts.append(f"antecedent ≤ {calculus.antecedent_bound}")
    if calculus.succedent_bound is not None:
        parts.append(f"succedent ≤ {calculus.succedent_bound}")
    return ", ".join(parts) if parts else "unbounded"


def render_calculus(calculus: Calculus) -> str:
    lines = [f"{calculus.name}  [{render_bounds(calculus)}]"]
    lines.extend("  " + render_rule(r) for r in calculus.rules)
    return "\n".join(lines)


# ============================================================
# BUILT-IN CALCULI
# ============================================================

BUILTIN_IDS = ("LK", "LJ", "SP", "ANTI_LJ", "SC")

_GAMMA, _DELTA, _THETA, _LAMBDA = CtxVar("Γ"), CtxVar("Δ"), CtxVar("Θ"), CtxVar("Λ")
_A, _B = FormulaVar("A"), FormulaVar("B")


def _seq(antecedent, succedent) -> SchematicSequent:
    return SchematicSequent(tuple(antecedent), tuple(succedent))


def _rule(name, premises, conclusion, kind=RuleKind.LOGICAL, side_conditions=()) -> RuleSchema:
    return RuleSchema(name, tuple(premises), conclusion, tuple(side_conditions), kind)


def _lk_rules() -> Tuple[RuleSchema, ...]:
    G, D, T, L, A, B = _GAMMA, _DELTA, _THETA, _LAMBDA, _A, _B
    neg = Pattern(Connective.NOT, ("A",))
    conj = Pattern(Connective.AND, ("A", "B"))
    disj = Pattern(Connective.OR, ("A", "B"))
    imp = Pattern(Connective.IMP, ("A", "B"))
    every = Pattern(Connective.FORALL, ("A",), binder="x")
    some = Pattern(Connective.EXISTS, ("A",), binder="x")
    at_term = Pattern(Connective.SUBST, ("A",), binder="x", term="t")
    at_eigen = Pattern(Connective.SUBST, ("A",), binder="x", term="a")
    S, X = RuleKind.STRUCTURAL, RuleKind.AXIOM

    return (
        _rule("axiom", [], _seq([A], [A]), X),
        _rule("thinning-L", [_seq([G], [T])], _seq([A, G], [T]), S),
        _rule("thinning-R", [_seq([G], [T])], _seq([G], [T, A]), S),
        _rule("contraction-L", [_seq([A, A, G], [T])], _seq([A, G], [T]), S),
        _rule("contraction-R", [_seq([G], [T, A, A])], _seq([G], [T, A]), S),
        _rule("interchange-L", [_seq([D, A, B, G], [T])], _seq([D, B, A, G], [T]), S),
        _rule("interchange-R", [_seq([G], [T, A, B, L])], _seq([G], [T, B, A, L]), S),
        _rule("cut", [_seq([G], [T, A]), _seq([A, D], [L])], _seq([G, D], [T, L]), RuleKind.CUT),
        _rule("¬L", [_seq([G], [T, A])], _seq([neg, G], [T])),
        _rule("¬R", [_seq([A, G], [T])], _seq([G], [T, neg])),
        _rule("∧L1", [_seq([A, G], [T])], _seq([conj, G], [T])),
        _rule("∧L2", [_seq([B, G], [T])], _seq([conj, G], [T])),
        _rule("∧R", [_seq([G], [T, A]), _seq([G], [T, B])], _seq([G], [T, conj])),
        _rule("∨L", [_seq([A, G], [T]), _seq([B, G], [T])], _seq([disj, G], [T])),
        _rule("∨R1", [_seq([G], [T, A])], _seq([G], [T, disj])),
        _rule("∨R2", [_seq([G], [T, B])], _seq([G], [T, disj])),
        _rule("⊃L", [_seq([G], [T, A]), _seq([B, D], [L])], _seq([imp, G, D], [T, L])),
        _rule("⊃R", [_seq([A, G], [T, B])], _seq([G], [T, imp])),
        _rule("∀L", [_seq([at_term, G], [T])], _seq([every, G], [T]), side_conditions=[TermInstance("t")]),
        _rule("∀R", [_seq([G], [T, at_eigen])], _seq([G], [T, every]), side_conditions=[EigenvariableFresh("a")]),
        _rule("∃L", [_seq([at_eigen, G], [T])], _seq([some, G], [T]), side_conditions=[EigenvariableFresh("a")]),
        _rule("∃R", [_seq([G], [T, at_term])], _seq([G], [T, some]), side_conditions=[TermInstance("t")]),
    )


def _restrict(base: Calculus, name: str, antecedent_bound, succedent_bound) -> Calculus:
    """Keep the rules of base whose schemas fit the new bounds."""
    candidate = Calculus(name, base.rules, antecedent_bound, succedent_bound)
    unfit = {p.split(":", 1)[0] for p in bound_violations(candidate)}
    if unfit:
        logger.debug("%s drops %s from %s", name, ", ".join(sorted(unfit)), base.name)
    rules = tuple(r for r in base.rules if r.name not in unfit)
    return Calculus(name, rules, antecedent_bound, succedent_bound)


def normalize_ident(ident: str) -> str:
    return ident.strip().upper().replace("-", "_")


@lru_cache(maxsize=None)
def builtin_calculus(ident: str) -> Calculus:
    key = normalize_ident(ident)
    if key == "LK":
        return Calculus("LK", _lk_rules())
    if key == "LJ":
        return _restrict(builtin_calculus("LK"), "LJ", None, 1)

    from .stahlize import stahlize_calculus

    if key in ("SP", "SC", "LK°"):
        return stahlize_calculus(builtin_calculus("LK"))
    if key in ("ANTI_LJ", "LJ°"):
        return stahlize_calculus(builtin_calculus("LJ"))
    raise UnknownCalculusError(ident)
