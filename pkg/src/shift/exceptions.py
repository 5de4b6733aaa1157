from src.libs.exceptions import PreconditionError


class DimensionMismatchError(PreconditionError):
    """
    **Description**: Raised when a subspace and an operator live in ambient spaces of different dimension.
    """
    pass


class ZeroVectorError(PreconditionError):
    """
    **Description**: Raised when a minimal invariant subspace is requested for the zero vector.
    """
    pass


class DegenerateBasisError(PreconditionError):
    """
    **Description**: Raised when the columns given as a subspace basis are linearly dependent.
    """
    pass
