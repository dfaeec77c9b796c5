"""Exception types shared across the package."""


class RlctError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(RlctError):
    """Shapes or lengths are inconsistent (row widths, offset/multiplicity counts)."""


class InvalidHyperplaneError(RlctError):
    """A hyperplane row with positive multiplicity has a zero normal vector."""


class InvalidMultiplicityError(RlctError):
    """A multiplicity is negative or not an integer."""


class EmptyArrangementError(RlctError):
    """No hyperplane survives normalization."""


class CentralityError(RlctError):
    """An operation that requires a central arrangement received an affine one."""


class ParseError(RlctError):
    """Syntax error in a factored-product polynomial string."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonlinearFactorError(ParseError):
    """A parenthesized factor is not a linear expression."""


class UnknownVariableError(ParseError):
    """A name not covered by the `vars` declaration appeared in a factor."""


class DegenerateBoxError(RlctError):
    """A sampling box has an empty or inverted coordinate interval."""


class InsufficientDataError(RlctError):
    """Too few usable volume samples to fit the asymptotic model."""


class SizeLimitError(RlctError):
    """Input exceeds the hard bound of a brute-force reference routine."""
