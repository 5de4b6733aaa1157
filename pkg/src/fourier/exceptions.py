from src.libs.exceptions import NumericalError, PreconditionError


class NormalizationError(PreconditionError):
    """
    **Description**: Raised when a level mask violates a_j(0) = 1 in the Fourier view.
    """
    pass


class TruncationRangeError(PreconditionError):
    """
    **Description**: Raised when a product depth or index range L is outside the supported limits.
    """
    pass


class InconclusiveDecayError(NumericalError):
    """
    **Description**: Raised when a decay sequence has too few entries above its zero threshold
    to fit a decay rate, but they are too close to the threshold to count as a finite support.

    **Attributes**:
    - `diagnostics`: *dict* - threshold, above-threshold count and range.
    """
    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class DecayRequiredError(PreconditionError):
    """
    **Description**: Raised when periodic factors are requested for an order whose decay sequence
    does not decay.
    """
    pass


class PoissonConsistencyError(NumericalError):
    """
    **Description**: Raised when the time-domain and Fourier-domain evaluations of the H_λ basis disagree.
    """
    pass
