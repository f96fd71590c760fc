"""Exception hierarchy shared by every module of the package."""


class PremonoidError(ValueError):
    pass


class SizeCapExceeded(PremonoidError):
    pass


class DimensionMismatch(PremonoidError):
    pass


class DegreeTooLarge(PremonoidError):
    pass


class NotANonUnit(PremonoidError):
    pass


class CycleDetected(PremonoidError):
    pass


class HypothesisViolation(PremonoidError):
    """No split satisfying the height inequality exists for some element."""

    def __init__(self, element, message=None):
        self.element = element
        super().__init__(message or f"no qualifying split for element {element}")


class NotSingular(PremonoidError):
    pass


class IdentityInput(PremonoidError):
    pass


class AlreadyIrreducible(PremonoidError):
    pass


class NotOrthogonal(PremonoidError):
    """Raised with the first entry of f^T f that differs from the identity."""

    def __init__(self, row, col, value):
        self.row, self.col, self.value = row, col, value
        super().__init__(f"not orthogonal: (f^T f)[{row}][{col}] = {value}")


class SingularMatrix(PremonoidError):
    pass


class ZeroVector(PremonoidError):
    pass


class ParseError(PremonoidError):
    pass
