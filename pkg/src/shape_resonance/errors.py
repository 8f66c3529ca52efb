"""Exception hierarchy shared by every module of the package."""


class ShapeResonanceError(Exception):
    """Base class for all errors raised by this package."""


class GammaPoleError(ShapeResonanceError, ValueError):
    """Gamma function evaluated at (or within 1e-14 of) a non-positive integer."""


class ConvergenceError(ShapeResonanceError, RuntimeError):
    """A series, quadrature or iteration failed to converge."""


class SearchEscapeError(ConvergenceError):
    """A root iteration left the search region: no zero near its seed."""


class OrderError(ShapeResonanceError, ValueError):
    """Bessel order outside the supported domain."""


class NotPointwiseError(ShapeResonanceError, ValueError):
    """The potential is a distribution and has no pointwise value."""


class PoleDivisionError(ShapeResonanceError, ZeroDivisionError):
    """An amplitude was evaluated exactly at one of its poles."""


class WrongHalfPlaneError(ShapeResonanceError):
    """Root refinement converged to a zero with Im k >= 0.

    The converged momentum is kept on ``k`` so callers can report it.
    """

    def __init__(self, message, k):
        super().__init__(message)
        self.k = k


class PoleMismatchError(ShapeResonanceError, ValueError):
    """A supplied pole is not a zero of the model's denominator."""


class RegionError(ShapeResonanceError, ValueError):
    """An integration boundary does not satisfy its flat/deep requirement."""


class IntegrationOverflowError(ShapeResonanceError, OverflowError):
    """The integrated solution overflowed despite renormalization."""
