"""Exception types shared across the package.

Separate classes (rather than bare ValueError) so callers can tell a
violated mathematical precondition from malformed input.
"""


class SpectralPairError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(SpectralPairError):
    """Operands live in different ambient dimensions or moduli."""


class InsufficientSpectrumError(SpectralPairError):
    """Frame classification requested with fewer spectrum points than set points."""


class SymmetryUndefinedError(SpectralPairError):
    """Transposition asked for a pair that is not a (Riesz or orthogonal) basis."""


class OverlapError(SpectralPairError):
    """Translated copies of a domain intersect with positive measure."""

    def __init__(self, message, offending=None):
        super().__init__(message)
        self.offending = offending


class DuplicateSpectrumError(SpectralPairError):
    """Two spectrum shifts coincide modulo the lattice; exponentials would repeat."""


class NonInvertibleError(SpectralPairError):
    """A matrix that must be invertible is singular or ill-conditioned."""


class EmptySpectrumError(SpectralPairError):
    """An enumeration produced no spectrum points."""


class UnsupportedPairError(SpectralPairError):
    """The operation is only defined for a stronger kind of pair."""


class ShapeMismatchError(SpectralPairError):
    """Coefficient data is not indexed consistently with the enumerated spectrum."""


class InputError(SpectralPairError):
    """Malformed command-line or JSON input."""
