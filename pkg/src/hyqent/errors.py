"""Exception types shared across the package."""


class CutoffTooSmall(ValueError):
    """Requested Fock-space cutoff cannot meet the tail-weight tolerance.

    Carries ``suggested`` with a cutoff that would.
    """

    def __init__(self, message, suggested=None):
        super().__init__(message)
        self.suggested = suggested


class UnsupportedKet(ValueError):
    """Operation does not support this symbolic ket kind (or kind pair)."""


class InconsistentMoments(ValueError):
    """Moment provider returned values incompatible with a Hermitian state."""


class NumericInconsistency(ArithmeticError):
    """A quantity that must be real came out with a large imaginary part."""


class DegenerateNormalization(ValueError):
    """State family hit a zero-norm point of its parameter space."""
