"""Exception types shared across the engine."""


class M0nError(Exception):
    """Base class for every error raised by this package."""


class LabelError(M0nError):
    """A marking label lies outside the marking set, or labels collide."""


class SizeError(M0nError):
    """A subset or marking count violates a size bound."""


class ArityError(M0nError):
    """Values built over different marking sets were mixed."""


class InconsistencyError(M0nError):
    """Exact arithmetic produced a contradiction; the input data is bad."""


class ShapeViolationError(M0nError):
    """A computed solution violates the expected support shape.

    Carries the offending functional so callers can report a concrete
    counterexample instead of a bare failure.
    """

    def __init__(self, message: str, coeffs=None, ray_values=None):
        super().__init__(message)
        self.coeffs = coeffs
        self.ray_values = ray_values
