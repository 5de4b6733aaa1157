from src.libs.exceptions import NumericalError, PreconditionError


class DegenerateLambdaError(PreconditionError):
    """
    **Description**: Raised when the normalization constant of a constructed mask is undefined,
    i.e. a prescribed factor z + e^{-λ2^{-j}} vanishes at z = 1.
    """
    pass


class NonRealSpectrumError(PreconditionError):
    """
    **Description**: Raised when a spectrum is not closed under conjugation, so the constructed
    masks would have non-real coefficients.
    """
    pass


class RankDeficientFitError(NumericalError):
    """
    **Description**: Raised when the least-squares basis of U is rank deficient on the fit window
    (window too small or exponents nearly coincident).
    """
    pass


class FitWindowError(PreconditionError):
    """
    **Description**: Raised when a fit window is empty or not inside the region the starting
    window certifies.
    """
    pass
