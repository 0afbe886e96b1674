"""Exception types shared across the harness."""


class DetnoiseError(Exception):
    """Base class for all harness errors."""


class ShapeError(DetnoiseError):
    """Operands have incompatible or invalid shapes."""


class LayoutError(DetnoiseError):
    """Two weight vectors do not share the same layer layout."""


class ValidationError(DetnoiseError):
    """A configuration, dataset or file failed validation."""


class DivergedError(DetnoiseError):
    """Training produced a non-finite loss.

    Carries the global step index at which divergence was detected so a
    failing run can be pinpointed inside a group.
    """

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"non-finite loss at step {step}")
