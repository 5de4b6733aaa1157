from src.libs.exceptions import PreconditionError


class InvalidMaskError(PreconditionError):
    """
    **Description**: Raised when a mask violates its invariants (real coefficients summing to 2)
    or a schedule has no head.
    """
    pass


class EmptyWindowError(PreconditionError):
    """
    **Description**: Raised when a sampled function with no samples is passed to an operation
    that needs data.
    """
    pass


class LevelRangeError(PreconditionError):
    """
    **Description**: Raised when a level count is outside its documented range (r ≥ 1)
    or starting data is not on the integer grid.
    """
    pass
