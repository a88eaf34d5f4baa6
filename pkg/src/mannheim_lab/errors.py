"""Exception taxonomy shared by the whole package."""

__all__ = [
    "MannheimLabError",
    "NullInputError",
    "OrientationMismatchError",
    "OutOfDomainError",
    "NullTangentError",
    "MixedCausalCharacterError",
    "NotUnitSpeedError",
    "VanishingCurvatureError",
    "NullPrincipalNormalError",
    "InvalidInitialFrameError",
    "NonPositiveCurvatureError",
    "ZeroLambdaError",
    "UnsupportedCombinationError",
    "NegativeConditionValueError",
    "VanishingTorsionError",
    "InconsistentDecompositionError",
    "DegenerateIndicatrixError",
    "ExprSyntaxError",
    "CsvFormatError",
]


class MannheimLabError(Exception):
    """Base class for all domain errors raised by this package."""


class NullInputError(MannheimLabError):
    """A null or zero vector was fed to an operation that excludes them."""


class OrientationMismatchError(MannheimLabError):
    """Two timelike vectors point into opposite time halves."""


class OutOfDomainError(MannheimLabError):
    """A parameter value lies outside a curve's domain."""


class NullTangentError(MannheimLabError):
    """A curve tangent is null where a non-null one is required."""


class MixedCausalCharacterError(MannheimLabError):
    """A field changed causal character along the curve."""


class NotUnitSpeedError(MannheimLabError):
    """An operation requiring arc-length parametrization got something else."""


class VanishingCurvatureError(MannheimLabError):
    """Curvature fell below tolerance; the frame is undefined there."""


class NullPrincipalNormalError(MannheimLabError):
    """The tangent derivative is null, so no unit principal normal exists."""


class InvalidInitialFrameError(MannheimLabError):
    """An initial frame violates the Gram invariants of the requested kind."""


class NonPositiveCurvatureError(MannheimLabError):
    """A prescribed curvature function is not strictly positive."""


class ZeroLambdaError(MannheimLabError):
    """Offset distance of zero would duplicate the base curve."""


class UnsupportedCombinationError(MannheimLabError):
    """A causal-character combination outside the five catalogued pair types."""


class NegativeConditionValueError(MannheimLabError):
    """The partner-condition expression went non-positive: no real offset."""


class VanishingTorsionError(MannheimLabError):
    """Torsion vanished where an identity divides by it."""


class InconsistentDecompositionError(MannheimLabError):
    """Tangent projections do not satisfy the decomposition invariant."""


class DegenerateIndicatrixError(MannheimLabError):
    """A spherical image is stationary; its tangent is undefined."""


class ExprSyntaxError(MannheimLabError):
    """Parse failure in the scalar-expression grammar.

    ``offset`` is the byte offset of the failure in the source text.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class CsvFormatError(MannheimLabError):
    """A sample CSV file does not match the documented layout."""
