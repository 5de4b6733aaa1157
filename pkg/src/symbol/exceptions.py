from src.libs.exceptions import PreconditionError


class ZeroArgumentError(PreconditionError):
    """
    **Description**: Raised when a symbol with negative exponents is evaluated at z = 0.
    """
    pass


class CoincidentPointsError(PreconditionError):
    """
    **Description**: Raised when interpolation points for the Lagrange bound are not pairwise distinct.

    **Usage**: Used by `SymbolService.lagrange_bound`.
    """
    pass


class DegreeWindowError(PreconditionError):
    """
    **Description**: Raised when a polynomial's exponents do not fit the window an operation requires,
    e.g. exponents outside [0, N] for the Lagrange bound with N+1 points.
    """
    pass
