"""Exception hierarchy shared by the library, the CLI and the service."""
from typing import Optional


class DualisError(Exception):
    """Base class for every error raised on purpose by dualis."""


class FormulaSyntaxError(DualisError):
    def __init__(self, text: str, offset: int, expected: str):
        self.text = text
        self.offset = offset
        self.expected = expected
        super().__init__(f"syntax error at offset {offset}: expected {expected}")


class NonPropositionalError(DualisError):
    pass


class MissingAtomError(DualisError):
    def __init__(self, atom: str):
        self.atom = atom
        super().__init__(f"valuation has no value for atom '{atom}'")


class IncompleteBindingError(DualisError):
    def __init__(self, rule: str, metavariable: str):
        self.rule = rule
        self.metavariable = metavariable
        super().__init__(f"binding for rule '{rule}' lacks metavariable '{metavariable}'")


class UnknownCalculusError(DualisError):
    def __init__(self, ident: str):
        self.ident = ident
        super().__init__(f"unknown calculus '{ident}'")


class MalformedCalculusError(DualisError):
    pass


class NotANegationError(DualisError):
    pass


class CalculusFormatError(DualisError):
    pass


class ProofFormatError(DualisError):
    pass


class CorpusBudgetError(DualisError):
    def __init__(self, count: int, budget: int):
        self.count = count
        self.budget = budget
        super().__init__(f"corpus would hold {count} items, budget is {budget}")


class StructuralGapError(DualisError):
    def __init__(self, calculus: str, operation: str, side: Optional[str] = None):
        self.calculus = calculus
        self.operation = operation
        self.side = side
        where = f" on the {side}" if side else ""
        super().__init__(f"calculus '{calculus}' has no {operation} rule{where}")
