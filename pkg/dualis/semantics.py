"""Classical truth-table semantics for propositional formulas and sequents."""
import logging
from enum import Enum
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence

from .errors import MissingAtomError, NonPropositionalError
from .formula import And, Atom, Formula, Imp, Not, Or, atoms, is_propositional

logger = logging.getLogger(__name__)

Valuation = Mapping[str, bool]


class Classification(str, Enum):
    TAUTOLOGY = "Tautology"
    CONTRADICTION = "Contradiction"
    CONTINGENT = "Contingent"


def valuations(names: Iterable[str]) -> Iterator[Dict[str, bool]]:
    """Every valuation over the given atoms, all-true first."""
    ordered = sorted(set(names))
    for values in product((True, False), repeat=len(ordered)):
        yield dict(zip(ordered, values))


def evaluate(f: Formula, v: Valuation) -> bool:
    if isinstance(f, Atom):
        if f.name not in v:
            raise MissingAtomError(f.name)
        return bool(v[f.name])
    if isinstance(f, Not):
        return not evaluate(f.sub, v)
    if isinstance(f, And):
        return evaluate(f.lhs, v) and evaluate(f.rhs, v)
    if isinstance(f, Or):
        return evaluate(f.lhs, v) or evaluate(f.rhs, v)
    if isinstance(f, Imp):
        return (not evaluate(f.lhs, v)) or evaluate(f.rhs, v)
    raise NonPropositionalError(f"cannot evaluate first-order formula '{f}'")


def _require_propositional(formulas: Sequence[Formula]) -> None:
    for f in formulas:
        if not is_propositional(f):
            raise NonPropositionalError(f"'{f}' is not propositional")


def classify(f: Formula) -> Classification:
    _require_propositional([f])
    seen_true = seen_false = False
    for v in valuations(atoms(f)):
        if evaluate(f, v):
            seen_true = True
        else:
            seen_false = True
        if seen_true and seen_false:
            return Classification.CONTINGENT
    return Classification.TAUTOLOGY if seen_true else Classification.CONTRADICTION


def counter_model(s) -> Optional[Dict[str, bool]]:
    """First valuation making the whole antecedent true and the whole succedent false."""
    _require_propositional(s.formulas())
    for v in valuations(s.atoms()):
        if all(evaluate(f, v) for f in s.antecedent) and not any(evaluate(f, v) for f in s.succedent):
            return v
    return None


def sequent_valid(s) -> bool:
    return counter_model(s) is None
