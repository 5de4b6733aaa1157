from src.libs.exceptions import PreconditionError


class WindowTooSmallError(PreconditionError):
    """
    **Description**: Raised when a sampled window is too short for the unit shifts a difference
    operator needs.
    """
    pass
