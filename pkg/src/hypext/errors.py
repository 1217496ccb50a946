"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Raised when an operation is asked for outside its geometric domain."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative solver hits its iteration cap.

    Carries the best iterate found so far in ``point`` and ``value``.
    """

    def __init__(self, message, point=None, value=None):
        super().__init__(message)
        self.point = point
        self.value = value
