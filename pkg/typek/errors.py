"""
Exceptions raised by the typek library.

Every exception carries a human readable ``message``; the verification
suites record it in the report of the failing check.
"""
from typing import Optional, Tuple


class TypeKError(Exception):
    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class LatticeParseError(TypeKError):
    """
    A lattice expression could not be parsed.
    """

    def __init__(self, message: str, expression: str, position: int):
        super().__init__(f"{message} at position {position} in {expression!r}")
        self.expression = expression
        self.position = position


class LatticeError(TypeKError):
    pass


class PreconditionError(TypeKError):
    pass


class GuardExceeded(TypeKError):
    def __init__(self, what: str, size: int, guard: int):
        super().__init__(f"{what} has size {size}, above the guard {guard}")
        self.size = size
        self.guard = guard


class VerificationFailure(TypeKError):
    pass


class SeriesError(TypeKError):
    pass


class SolveError(TypeKError):
    """
    An operator system could not be solved order by order.

    ``kind`` is either "inconsistent" or "underdetermined".
    """

    def __init__(self, kind: str, order: int, monomial: Tuple[int, ...], detail: Optional[str] = None):
        message = f"{kind} at order {order}, monomial {monomial}"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.kind = kind
        self.order = order
        self.monomial = monomial


class FixtureError(TypeKError):
    pass
