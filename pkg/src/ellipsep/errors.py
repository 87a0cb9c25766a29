class EllipseError(ValueError):
    """Base class for invalid or degenerate ellipse models."""


class NotAnEllipse(EllipseError):
    pass


class DegenerateEllipse(EllipseError):
    """Distance-sum bound does not exceed the focal distance."""


class EmptyEllipse(EllipseError):
    """The quadratic form has no real zero (empty interior)."""


class InfeasibleOrdinate(EllipseError):
    """No boundary point exists on the requested horizontal line."""
