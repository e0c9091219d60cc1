"""Exception types raised by entpoly.

Every domain error derives from :class:`EntpolyError` so callers (the CLI in
particular) can separate them from programming mistakes.
"""


class EntpolyError(ValueError):
    """Base class for domain errors."""


class AllZero(EntpolyError):
    pass


class NotNormalized(EntpolyError):
    def __init__(self, deficit: float, what: str = "state"):
        self.deficit = deficit
        super().__init__(f"{what} is not normalized (|1 - norm^2| = {deficit:.3e})")


class BadLength(EntpolyError):
    pass


class WrongArity(EntpolyError):
    pass


class BadArity(EntpolyError):
    pass


class VariableCollision(EntpolyError):
    pass


class SingularBasis(EntpolyError):
    pass


class NotUnitary(EntpolyError):
    def __init__(self, deviation: float):
        self.deviation = deviation
        super().__init__(f"matrix is not unitary (max |T T^dagger - I| = {deviation:.3e})")


class SingularBranch(EntpolyError):
    pass


class ComplexCoefficients(EntpolyError):
    pass


class ParseError(EntpolyError):
    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
