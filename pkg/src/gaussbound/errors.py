"""Exception hierarchy and warnings shared across the package."""

__all__ = [
    "GaussBoundError",
    "NonSymmetricError",
    "DimensionMismatchError",
    "OrderingMismatchError",
    "NegativeOccupationError",
    "InvalidParamsError",
    "PatternMismatchError",
    "SingularGammaError",
    "NotPositiveDefiniteError",
    "NotSymplecticError",
    "NotPassiveError",
    "SqueezerInUnitaryCompositionError",
    "InvalidKappaError",
    "InvalidTauError",
    "NoBracketError",
    "NotConvergedError",
    "InconclusiveError",
    "FixtureMismatchError",
    "NumericalFailureError",
    "DataFormatError",
    "DegenerateSpectrumWarning",
    "IllConditionedParamsWarning",
]


class GaussBoundError(Exception):
    """Base class for every error raised by this package."""


class NonSymmetricError(GaussBoundError):
    """Matrix expected to be symmetric is not, beyond tolerance."""


class DimensionMismatchError(GaussBoundError):
    """Operands have incompatible shapes or mode counts."""


class OrderingMismatchError(GaussBoundError):
    """Operands use different quadrature orderings."""


class NegativeOccupationError(GaussBoundError):
    """Thermal occupation number below zero."""


class InvalidParamsError(GaussBoundError):
    """Family parameters violate an admissibility constraint."""


class PatternMismatchError(GaussBoundError):
    """Matrix does not have the sparsity pattern required for the fast path."""


class SingularGammaError(GaussBoundError):
    """Covariance matrix is singular where an inverse is required."""


class NotPositiveDefiniteError(GaussBoundError):
    """Matrix expected to be positive definite is not."""


class NotSymplecticError(GaussBoundError):
    """Matrix fails the symplectic-form preservation check."""


class NotPassiveError(GaussBoundError):
    """Symplectic matrix is not orthogonal, so it is not energy preserving."""


class SqueezerInUnitaryCompositionError(GaussBoundError):
    """Circuit contains a squeezer where a passive unitary is required."""


class InvalidKappaError(GaussBoundError):
    """Thermal scale parameter out of range."""


class InvalidTauError(GaussBoundError):
    """Squeezing strength parameter out of range."""


class NoBracketError(GaussBoundError):
    """Coarse scan found no sign change for the requested transition."""


class NotConvergedError(GaussBoundError):
    """Iterative refinement or extrapolation failed to converge."""


class InconclusiveError(GaussBoundError):
    """Solver did not reach a certified optimum, so no verdict is issued."""


class FixtureMismatchError(GaussBoundError):
    """A built-in reference identity failed to hold numerically."""


class NumericalFailureError(GaussBoundError):
    """Linear-algebra breakdown inside an iterative solver."""


class DataFormatError(GaussBoundError):
    """An input file does not conform to its declared format."""


class DegenerateSpectrumWarning(UserWarning):
    """Symplectic spectrum has (near-)degenerate values; gauge is arbitrary."""


class IllConditionedParamsWarning(UserWarning):
    """Family parameters sit close to an excluded surface."""
