"""
Formula syntax: abstract trees, the concrete grammar, the canonical printer
and the variable machinery used by the first-order rules.

Term identifiers are split lexically: names starting with u, v, w, x, y or z
are variables, every other name in term position is a constant. The term
constructors enforce the split, so printed terms always parse back to the
same term.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Optional, Tuple

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from .errors import FormulaSyntaxError

IDENTIFIER_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*'*\Z")
KEYWORDS = frozenset({"forall", "exists"})
VARIABLE_INITIALS = frozenset("uvwxyz")


def is_identifier(name: object) -> bool:
    return isinstance(name, str) and bool(IDENTIFIER_RE.match(name)) and name not in KEYWORDS


def is_variable_name(name: object) -> bool:
    return is_identifier(name) and name[0] in VARIABLE_INITIALS


# ============================================================
# TERMS
# ============================================================

class Term:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Var(Term):
    name: str

    def __post_init__(self):
        if not is_variable_name(self.name):
            raise ValueError(f"'{self.name}' is not a variable name (variables start with u-z)")


@dataclass(frozen=True)
class Const(Term):
    name: str

    def __post_init__(self):
        if not is_identifier(self.name) or is_variable_name(self.name):
            raise ValueError(f"'{self.name}' is not a constant name")


def parse_term(text: str) -> Term:
    name = text.strip()
    if is_variable_name(name):
        return Var(name)
    if is_identifier(name):
        return Const(name)
    raise FormulaSyntaxError(text, 0, "a term identifier")


def print_term(t: Term) -> str:
    return t.name


# ============================================================
# FORMULAS
# ============================================================

class Formula:
    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str

    def __post_init__(self):
        if not is_identifier(self.name):
            raise ValueError(f"'{self.name}' is not an identifier")


@dataclass(frozen=True)
class Pred(Formula):
    name: str
    args: Tuple[Term, ...]

    def __post_init__(self):
        if not is_identifier(self.name):
            raise ValueError(f"'{self.name}' is not an identifier")
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("a predicate needs at least one argument")


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Or(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Imp(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        if not is_variable_name(self.var):
            raise ValueError(f"cannot quantify over '{self.var}'")


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        if not is_variable_name(self.var):
            raise ValueError(f"cannot quantify over '{self.var}'")


BINARY = (And, Or, Imp)
QUANTIFIERS = (Forall, Exists)


def is_propositional(f: Formula) -> bool:
    if isinstance(f, Atom):
        return True
    if isinstance(f, Not):
        return is_propositional(f.sub)
    if isinstance(f, BINARY):
        return is_propositional(f.lhs) and is_propositional(f.rhs)
    return False


def atoms(f: Formula) -> FrozenSet[str]:
    """Names of the propositional atoms occurring in f."""
    if isinstance(f, Atom):
        return frozenset({f.name})
    if isinstance(f, Pred):
        return frozenset()
    if isinstance(f, Not):
        return atoms(f.sub)
    if isinstance(f, QUANTIFIERS):
        return atoms(f.body)
    return atoms(f.lhs) | atoms(f.rhs)


def subformulas(f: Formula) -> Iterator[Formula]:
    yield f
    if isinstance(f, Not):
        yield from subformulas(f.sub)
    elif isinstance(f, BINARY):
        yield from subformulas(f.lhs)
        yield from subformulas(f.rhs)
    elif isinstance(f, QUANTIFIERS):
        yield from subformulas(f.body)


def formula_size(f: Formula) -> int:
    """Number of connectives and quantifiers."""
    if isinstance(f, (Atom, Pred)):
        return 0
    if isinstance(f, Not):
        return 1 + formula_size(f.sub)
    if isinstance(f, QUANTIFIERS):
        return 1 + formula_size(f.body)
    return 1 + formula_size(f.lhs) + formula_size(f.rhs)


# ============================================================
# VARIABLES AND SUBSTITUTION
# ============================================================

def term_vars(t: Term) -> FrozenSet[str]:
    return frozenset({t.name}) if isinstance(t, Var) else frozenset()


def free_vars(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Atom):
        return frozenset()
    if isinstance(f, Pred):
        return frozenset(a.name for a in f.args if isinstance(a, Var))
    if isinstance(f, Not):
        return free_vars(f.sub)
    if isinstance(f, QUANTIFIERS):
        return free_vars(f.body) - {f.var}
    return free_vars(f.lhs) | free_vars(f.rhs)


def occurs_free(name: str, f: Formula) -> bool:
    return name in free_vars(f)


def fresh_name(name: str, avoid: FrozenSet[str]) -> str:
    candidate = name + "'"
    while candidate in avoid:
        candidate += "'"
    return candidate


def substitute(f: Formula, v: str, t: Term) -> Formula:
    """Replace the free occurrences of variable v by t, renaming binders that would capture t."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Pred):
        return Pred(f.name, tuple(t if isinstance(a, Var) and a.name == v else a for a in f.args))
    if isinstance(f, Not):
        return Not(substitute(f.sub, v, t))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.lhs, v, t), substitute(f.rhs, v, t))

    if f.var == v or v not in free_vars(f.body):
        return f
    var, body = f.var, f.body
    if var in term_vars(t):
        renamed = fresh_name(var, free_vars(body) | term_vars(t) | {v})
        body = substitute(body, var, Var(renamed))
        var = renamed
    return type(f)(var, substitute(body, v, t))


# ============================================================
# PRINTER
# ============================================================

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_UNARY = 1, 2, 3, 4

_OPERATORS = {And: ("&", _PREC_AND), Or: ("|", _PREC_OR), Imp: ("->", _PREC_IMP)}


@lru_cache(maxsize=1 << 16)
def print_formula(f: Formula) -> str:
    return _render(f, _PREC_IMP, True)


def _render(f: Formula, prec: int, right_edge: bool) -> str:
    # right_edge: nothing follows f before the enclosing group closes, so a
    # quantifier body may run to the end
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Pred):
        return f"{f.name}({', '.join(a.name for a in f.args)})"
    if isinstance(f, Not):
        return "~" + _render(f.sub, _PREC_UNARY, right_edge)
    if isinstance(f, QUANTIFIERS):
        keyword = "forall" if isinstance(f, Forall) else "exists"
        text = f"{keyword} {f.var}. {_render(f.body, _PREC_IMP, True)}"
        return text if right_edge else f"({text})"

    symbol, own = _OPERATORS[type(f)]
    wrap = own < prec
    edge = True if wrap else right_edge
    if isinstance(f, Imp):
        left = _render(f.lhs, _PREC_OR, False)
        right = _render(f.rhs, _PREC_IMP, edge)
    else:
        left = _render(f.lhs, own, False)
        right = _render(f.rhs, own + 1, edge)
    text = f"{left} {symbol} {right}"
    return f"({text})" if wrap else text


# ============================================================
# PARSER
# ============================================================

# Rules with a _q suffix end in a quantifier, whose body extends to the end
# of the enclosing group; a quantifier therefore only appears as the last
# operand of a chain.
GRAMMAR = r"""
    formula_start: formula
    sequent_start: [side] _TURNSTILE [side]
    side: formula (_COMMA formula)*

    ?formula: disj
            | disj_q
            | disj _IMP formula                      -> imp
    ?disj: conj
         | disj _OR conj                             -> or_
    ?disj_q: conj_q
           | disj _OR conj_q                         -> or_
    ?conj: unary
         | conj _AND unary                           -> and_
    ?conj_q: unary_q
           | conj _AND unary_q                       -> and_
    ?unary: _NOT unary                               -> not_
          | NAME                                     -> prop
          | NAME _LPAR NAME (_COMMA NAME)* _RPAR     -> pred
          | _LPAR formula _RPAR
    ?unary_q: _NOT unary_q                           -> not_
            | _FORALL NAME _DOT formula              -> forall_
            | _EXISTS NAME _DOT formula              -> exists_

    _TURNSTILE: "|-"
    _IMP: "->"
    _OR: "|"
    _AND: "&"
    _NOT: "~"
    _LPAR: "("
    _RPAR: ")"
    _COMMA: ","
    _DOT: "."
    _FORALL: "forall"
    _EXISTS: "exists"
    NAME: /[a-zA-Z][a-zA-Z0-9_]*'*/

    %import common.WS
    %ignore WS
"""

_TERMINAL_TEXT = {
    "_TURNSTILE": "'|-'",
    "_IMP": "'->'",
    "_OR": "'|'",
    "_AND": "'&'",
    "_NOT": "'~'",
    "_LPAR": "'('",
    "_RPAR": "')'",
    "_COMMA": "','",
    "_DOT": "'.'",
    "_FORALL": "'forall'",
    "_EXISTS": "'exists'",
    "NAME": "identifier",
    "$END": "end of input",
}

_PARSER = Lark(
    GRAMMAR,
    parser="lalr",
    start=["formula_start", "sequent_start"],
    maybe_placeholders=True,
)


class _QuantifierNameError(Exception):
    def __init__(self, offset: int, name: str):
        self.offset = offset
        self.name = name


class _FormulaBuilder(Transformer):
    def formula_start(self, items):
        return items[0]

    def sequent_start(self, items):
        antecedent, succedent = items
        return (tuple(antecedent or ()), tuple(succedent or ()))

    def side(self, items):
        return tuple(items)

    def imp(self, items):
        return Imp(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def and_(self, items):
        return And(items[0], items[1])

    def not_(self, items):
        return Not(items[0])

    def prop(self, items):
        return Atom(str(items[0]))

    def pred(self, items):
        name, *args = items
        return Pred(str(name), tuple(parse_term(str(a)) for a in args))

    def forall_(self, items):
        return Forall(self._bound_name(items[0]), items[1])

    def exists_(self, items):
        return Exists(self._bound_name(items[0]), items[1])

    @staticmethod
    def _bound_name(token) -> str:
        if not is_variable_name(str(token)):
            raise _QuantifierNameError(token.start_pos, str(token))
        return str(token)


def _describe_expected(exc: UnexpectedInput) -> str:
    if isinstance(exc, UnexpectedToken):
        names = exc.expected
    elif isinstance(exc, UnexpectedCharacters):
        names = exc.allowed or set()
    else:
        names = getattr(exc, "expected", None) or set()
    described = sorted(_TERMINAL_TEXT.get(n, n) for n in names)
    if not described:
        return "a well-formed formula"
    if len(described) == 1:
        return described[0]
    return "one of " + ", ".join(described)


def _error_offset(exc: UnexpectedInput, text: str) -> int:
    if isinstance(exc, UnexpectedEOF):
        return len(text)
    if isinstance(exc, UnexpectedToken) and exc.token.type == "$END":
        return len(text)
    offset: Optional[int] = getattr(exc, "pos_in_stream", None)
    return len(text) if offset is None else offset


_TOO_DEEP = "a less deeply nested formula"


def _parse(text: str, start: str):
    try:
        return _parse_tree(text, start)
    except RecursionError:
        raise FormulaSyntaxError(text, 0, _TOO_DEEP) from None


def _parse_tree(text: str, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedInput as exc:
        raise FormulaSyntaxError(text, _error_offset(exc, text), _describe_expected(exc)) from None
    try:
        return _FormulaBuilder().transform(tree)
    except VisitError as exc:
        orig = exc.orig_exc
        if isinstance(orig, _QuantifierNameError):
            raise FormulaSyntaxError(text, orig.offset, "a variable name (u-z) after the quantifier") from None
        if isinstance(orig, ValueError):
            raise FormulaSyntaxError(text, 0, str(orig)) from None
        if isinstance(orig, RecursionError):
            raise FormulaSyntaxError(text, 0, _TOO_DEEP) from None
        raise


def parse_formula(text: str) -> Formula:
    return _parse(text, "formula_start")


def parse_sides(text: str) -> Tuple[Tuple[Formula, ...], Tuple[Formula, ...]]:
    """Parse 'A, B |- C' into its two formula tuples."""
    return _parse(text, "sequent_start")
