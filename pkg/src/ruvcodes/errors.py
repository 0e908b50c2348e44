"""Exception hierarchy shared by every module."""


class CodeError(ValueError):
    """Base class for all library errors."""


class NotPrime(CodeError):
    pass


class EvenPrime(CodeError):
    pass


class ReduciblePolynomial(CodeError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class ZeroInput(CodeError):
    pass


class NotAUnit(CodeError):
    pass


class NotASquare(CodeError):
    pass


class UncoveredFamily(CodeError):
    pass


class BoundViolation(CodeError):
    def __init__(self, bound: str, value):
        super().__init__(f"bound violated: {bound} (got {value})")
        self.bound = bound
        self.value = value


class NotAUnitForm(CodeError):
    pass


class OutOfRange(CodeError):
    pass


class ParseError(CodeError):
    pass


class BudgetExceeded(CodeError):
    """Search stopped at its node limit before reaching a verdict."""

    def __init__(self, limit: int, nodes: int):
        super().__init__(f"node budget {limit} exhausted after {nodes} nodes")
        self.limit = limit
        self.nodes = nodes


class CapExceeded(CodeError):
    pass
