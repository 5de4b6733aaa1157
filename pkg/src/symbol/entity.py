from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.config.symbol import settings


class NormalizationConvention(str, Enum):
    """
    **Description**: Which of the two coefficient scalings a symbol is read in.

    - `SUBDIVISION_SUM2`: mask coefficients sum to 2 (a^{[j]}(1) = 2).
    - `FOURIER_UNIT`: the trigonometric polynomial satisfies a_j(0) = 1.

    Converting between them multiplies every coefficient by 1/2 or 2.
    """
    SUBDIVISION_SUM2 = "sum2"
    FOURIER_UNIT = "unit"


def convention_factor(source: NormalizationConvention, target: NormalizationConvention) -> float:
    if source == target:
        return 1.0
    if source == NormalizationConvention.SUBDIVISION_SUM2:
        return 0.5
    return 2.0


@dataclass(frozen=True, eq=False)
class LaurentPolynomial:
    """
    **Description**: Finite complex coefficient sequence with an integer offset,
    p(z) = Σ_m coeffs[m - lo] z^m.

    The same object is read as a subdivision symbol in z and, through z = e^{-2πiy},
    as a trigonometric polynomial in y.

    **Fields**:
    - `coeffs`: *np.ndarray[complex]* - non-empty, first and last entries non-zero
      unless the polynomial is zero (a single zero coefficient with `lo == 0`).
    - `lo`: *int* - exponent of the first coefficient.

    **Usage**: Construct through `LaurentPolynomial.from_coeffs`, which trims.
    """
    coeffs: np.ndarray
    lo: int = 0

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex).ravel()
        if coeffs.size == 0:
            raise ValueError("LaurentPolynomial needs at least one coefficient")

        scale = np.max(np.abs(coeffs))
        if scale == 0 or not np.isfinite(scale):
            if not np.isfinite(scale):
                raise ValueError("LaurentPolynomial coefficients must be finite")
            coeffs, lo = np.zeros(1, dtype=complex), 0
        else:
            coeffs = np.where(np.abs(coeffs) < settings.trim_tol * scale, 0, coeffs)
            nonzero = np.flatnonzero(coeffs)
            lo = int(self.lo) + int(nonzero[0])
            coeffs = coeffs[nonzero[0]:nonzero[-1] + 1]

        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "lo", lo)

    @classmethod
    def from_coeffs(cls, coeffs, lo: int = 0) -> "LaurentPolynomial":
        return cls(np.asarray(coeffs, dtype=complex), int(lo))

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(np.zeros(1, dtype=complex), 0)

    @classmethod
    def monomial(cls, exponent: int, coefficient: complex = 1.0) -> "LaurentPolynomial":
        return cls(np.array([coefficient], dtype=complex), int(exponent))

    @property
    def hi(self) -> int:
        return self.lo + self.coeffs.size - 1

    @property
    def span(self) -> int:
        return self.coeffs.size - 1

    @property
    def exponents(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1)

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    def allclose(self, other: "LaurentPolynomial", atol: float = 1e-12) -> bool:
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return bool(np.allclose(self.dense(lo, hi), other.dense(lo, hi), rtol=0, atol=atol))

    def dense(self, lo: int, hi: int) -> np.ndarray:
        """Coefficients for exponents lo..hi, zero-padded."""
        out = np.zeros(hi - lo + 1, dtype=complex)
        start = self.lo - lo
        if start < 0 or self.hi > hi:
            raise ValueError(f"Window [{lo}, {hi}] does not contain exponents [{self.lo}, {self.hi}]")
        out[start:start + self.coeffs.size] = self.coeffs
        return out

    def __repr__(self) -> str:
        return f"LaurentPolynomial(lo={self.lo}, coeffs={np.array2string(self.coeffs, precision=6)})"
