from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ExponentialPolynomialFit:
    """
    **Description**: Least-squares fit f(t) ≈ π(t) p(t) e^{λt} with p of fixed degree.

    **Fields**:
    - `lam`: *complex* - λ.
    - `coeffs`: *np.ndarray[complex]* - coefficients of p in ascending powers.
    - `residual`: *float* - ‖f - fit‖ / ‖f‖ on the samples.
    """
    lam: complex
    coeffs: np.ndarray
    residual: float

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1
