class LabError(Exception):
    """Root of every error raised by the laboratory."""


class PreconditionError(LabError):
    """
    **Description**: Raised when an operation receives input outside its documented domain.

    **Cause**: Empty windows, coincident points, mismatched dimensions, out-of-range options.

    **Usage**: Mapped to CLI exit status 2 by `src.handlers`.
    """
    pass


class NumericalError(LabError):
    """
    **Description**: Raised when a computation cannot certify its result.

    **Cause**: Truncation bounds too large, rank-deficient fits, inconsistent pipelines.

    **Usage**: Mapped to CLI exit status 2 by `src.handlers`.
    """
    pass
