"""
Structural bridge.

Search works on sequents read as sets, so the rule instance it finds at a
node usually concludes a shorter or reordered version of the sequent at
hand. The bridge closes that gap with the calculus' own thinning,
contraction and interchange rules, producing ordinary ordered inference
steps that the proof checker accepts.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .calculus import (
    NO_BOUNDS,
    Binding,
    Calculus,
    CtxVar,
    FormulaVar,
    MatchMode,
    RuleKind,
    RuleSchema,
    SchemaItem,
    Sequent,
    Side,
    instantiate,
    match_conclusion,
)
from .errors import StructuralGapError
from .formula import Formula

logger = logging.getLogger(__name__)


class End(str, Enum):
    FRONT = "front"
    BACK = "back"


class Operation(str, Enum):
    THINNING = "thinning"
    CONTRACTION = "contraction"
    INTERCHANGE = "interchange"


@dataclass(frozen=True)
class StructuralRole:
    operation: Operation
    side: Side
    end: Optional[End] = None


# (sequent concluded, rule name, binding); the premise is the next entry's
# sequent, or the target for the last one
BridgeStep = Tuple[Sequent, str, Binding]


def _only_contexts(items: Sequence[SchemaItem]) -> bool:
    return all(isinstance(i, CtxVar) for i in items)


def _operation(below: Tuple[SchemaItem, ...], above: Tuple[SchemaItem, ...]) -> Optional[Tuple[Operation, Optional[End]]]:
    if len(above) == len(below) - 1 and below:
        if isinstance(below[0], FormulaVar) and below[1:] == above and _only_contexts(above):
            return Operation.THINNING, End.FRONT
        if isinstance(below[-1], FormulaVar) and below[:-1] == above and _only_contexts(above):
            return Operation.THINNING, End.BACK
    if len(above) == len(below) + 1 and below:
        if isinstance(below[0], FormulaVar) and above == (below[0],) + below and _only_contexts(below[1:]):
            return Operation.CONTRACTION, End.FRONT
        if isinstance(below[-1], FormulaVar) and above == below + (below[-1],) and _only_contexts(below[:-1]):
            return Operation.CONTRACTION, End.BACK
    if len(above) == len(below):
        diffs = [i for i, (x, y) in enumerate(zip(below, above)) if x != y]
        if len(diffs) == 2 and diffs[1] == diffs[0] + 1:
            i, j = diffs
            swapped = below[i] == above[j] and below[j] == above[i]
            pair = isinstance(below[i], FormulaVar) and isinstance(below[j], FormulaVar)
            rest = [x for k, x in enumerate(below) if k not in (i, j)]
            if swapped and pair and _only_contexts(rest):
                return Operation.INTERCHANGE, None
    return None


def structural_role(rule: RuleSchema) -> Optional[StructuralRole]:
    """What a one-premise structural schema does, and to which side."""
    if rule.kind is not RuleKind.STRUCTURAL or len(rule.premises) != 1:
        return None
    premise, conclusion = rule.premises[0], rule.conclusion
    for side in Side:
        if side.other.of(premise) != side.other.of(conclusion):
            continue
        found = _operation(side.of(conclusion), side.of(premise))
        if found is not None:
            return StructuralRole(found[0], side, found[1])
    return None


def _with_side(s: Sequent, side: Side, items: Sequence[Formula]) -> Sequent:
    if side is Side.ANTECEDENT:
        return Sequent(tuple(items), s.succedent)
    return Sequent(s.antecedent, tuple(items))


@dataclass
class StructuralBridge:
    calculus: Calculus
    roles: Dict[Tuple[Operation, Side], Tuple[RuleSchema, Optional[End]]] = field(default_factory=dict)

    def __post_init__(self):
        for rule in self.calculus.rules:
            role = structural_role(rule)
            if role is not None:
                self.roles.setdefault((role.operation, role.side), (rule, role.end))
        logger.debug(
            "structural rules of %s: %s",
            self.calculus.name,
            {f"{op.value}/{side.value}": rule.name for (op, side), (rule, _) in self.roles.items()},
        )

    def rule_for(self, operation: Operation, side: Side) -> Tuple[RuleSchema, Optional[End]]:
        if (operation, side) not in self.roles:
            raise StructuralGapError(self.calculus.name, operation.value, side.value)
        return self.roles[(operation, side)]

    def require_for_sets(self) -> None:
        """Raise StructuralGapError unless set-read proofs can always be bridged.

        Thinning is needed on both sides. Contraction and interchange are
        needed on every side whose bound allows more than one formula.
        """
        for side in Side:
            bound = side.of(self.calculus.bounds)
            self.rule_for(Operation.THINNING, side)
            if bound is None or bound > 1:
                self.rule_for(Operation.CONTRACTION, side)
                self.rule_for(Operation.INTERCHANGE, side)

    def rules_of(self, operation: Operation) -> List[RuleSchema]:
        return [rule for (op, _), (rule, _) in self.roles.items() if op is operation]

    # ------------------------------------------------------------
    # planning
    # ------------------------------------------------------------

    def plan(self, below: Sequent, above: Sequent) -> List[BridgeStep]:
        """Steps deriving below from above, listed from below upwards."""
        steps: List[BridgeStep] = []
        current = below
        for side in Side:
            current = self._plan_side(current, side, list(side.of(above)), steps)
        if current != above:
            raise StructuralGapError(self.calculus.name, "structural bridge")
        return steps

    def _apply(self, steps: List[BridgeStep], rule: RuleSchema, current: Sequent, desired: Sequent) -> Sequent:
        for binding in match_conclusion(rule, current, NO_BOUNDS, MatchMode.ORDERED):
            premises, _ = instantiate(rule, binding)
            if premises[0] == desired:
                steps.append((current, rule.name, binding))
                return desired
        raise StructuralGapError(self.calculus.name, f"{rule.name} step towards {desired}")

    def _swap(self, steps, current: Sequent, side: Side, i: int) -> Sequent:
        rule, _ = self.rule_for(Operation.INTERCHANGE, side)
        items = list(side.of(current))
        items[i], items[i + 1] = items[i + 1], items[i]
        return self._apply(steps, rule, current, _with_side(current, side, items))

    def _move_to_end(self, steps, current: Sequent, side: Side, index: int, end: End) -> Tuple[Sequent, int]:
        size = len(side.of(current))
        step = -1 if end is End.FRONT else 1
        stop = 0 if end is End.FRONT else size - 1
        while index != stop:
            neighbour = index + step
            # equal neighbours need no interchange step
            if side.of(current)[neighbour] != side.of(current)[index]:
                current = self._swap(steps, current, side, min(index, neighbour))
            index = neighbour
        return current, index

    def _plan_side(self, current: Sequent, side: Side, target: List[Formula], steps: List[BridgeStep]) -> Sequent:
        wanted = Counter(target)

        # drop every occurrence beyond what the target needs
        surplus = Counter(side.of(current)) - wanted
        if surplus:
            rule, end = self.rule_for(Operation.THINNING, side)
            while surplus:
                items = side.of(current)
                order = range(len(items)) if end is End.FRONT else range(len(items) - 1, -1, -1)
                index = next(i for i in order if surplus[items[i]] > 0)
                current, index = self._move_to_end(steps, current, side, index, end)
                items = list(side.of(current))
                del items[index]
                current = self._apply(steps, rule, current, _with_side(current, side, items))
                surplus = Counter(side.of(current)) - wanted

        # copy the formulas the target holds more than once
        missing = wanted - Counter(side.of(current))
        if missing:
            rule, end = self.rule_for(Operation.CONTRACTION, side)
            for f in sorted(missing, key=target.index):
                for _ in range(missing[f]):
                    items = side.of(current)
                    index = items.index(f) if end is End.FRONT else len(items) - 1 - items[::-1].index(f)
                    current, index = self._move_to_end(steps, current, side, index, end)
                    items = list(side.of(current))
                    items.insert(index, f)
                    current = self._apply(steps, rule, current, _with_side(current, side, items))

        # put everything in target order
        items = list(side.of(current))
        if items != target:
            positions: Dict[Formula, List[int]] = {}
            for k, f in enumerate(target):
                positions.setdefault(f, []).append(k)
            ranks = [positions[f].pop(0) for f in items]
            for end_index in range(len(ranks) - 1, 0, -1):
                for i in range(end_index):
                    if ranks[i] > ranks[i + 1]:
                        ranks[i], ranks[i + 1] = ranks[i + 1], ranks[i]
                        current = self._swap(steps, current, side, i)
        return current


@lru_cache(maxsize=None)
def structural_bridge(calculus: Calculus) -> StructuralBridge:
    return StructuralBridge(calculus)
