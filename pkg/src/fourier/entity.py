from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple

import numpy as np


class DecayKind(str, Enum):
    FINITELY_SUPPORTED = "finitely_supported"
    EXPONENTIAL_DECAY = "exponential_decay"
    NO_DECAY = "no_decay"


@dataclass(frozen=True, eq=False)
class ProductDerivatives:
    """
    **Description**: [P(y), P'(y), ..., P^{(d)}(y)] of the truncated product P = Π_{j≤depth} a_j(2^{-j}·)
    together with a bound on |φ̂^{(k)}(y) - P^{(k)}(y)| over all orders.
    """
    y: complex
    values: np.ndarray
    error_bound: float
    depth: int


@dataclass(frozen=True, eq=False)
class DecaySequence:
    """
    **Description**: Entries φ̂^{(k)}(-iλ/2π + ℓ) for ℓ = -L..L.

    **Fields**:
    - `lam`: *complex* - λ.
    - `order`: *int* - k.
    - `entries`: *np.ndarray[complex]* - `entries[i]` belongs to ℓ = i - L.
    - `truncation_error`: *float* - largest per-entry bound of the product tail.
    """
    lam: complex
    order: int
    entries: np.ndarray
    truncation_error: float = 0.0

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex).ravel()
        if entries.size % 2 == 0:
            raise ValueError("Decay entries must be indexed by a symmetric range -L..L")
        if self.truncation_error < 0:
            raise ValueError("Truncation error must be non-negative")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def synthetic(cls, fn, half_range: int, lam: complex = 0j, order: int = 0) -> "DecaySequence":
        """Samples ℓ ↦ fn(ℓ) on -L..L."""
        indices = np.arange(-half_range, half_range + 1)
        return cls(lam, order, np.array([fn(int(i)) for i in indices], dtype=complex))

    @property
    def half_range(self) -> int:
        return self.entries.size // 2

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.half_range, self.half_range + 1)

    def at(self, index: int) -> complex:
        return complex(self.entries[index + self.half_range])


@dataclass(frozen=True)
class DecayVerdict:
    """
    **Description**: Classification of a decay sequence.

    **Fields**:
    - `kind`: *DecayKind*
    - `support`: *Tuple[int, ...]* - non-zero indices when finitely supported, else empty.
    - `constant`, `ratio`: *float | None* - C and q of the fitted bound C·q^{|ℓ|}.
    - `residual`: *float | None* - rms residual of the log-linear fit.
    - `threshold`: *float* - level below which entries were read as zero.
    """
    kind: DecayKind
    support: Tuple[int, ...] = ()
    constant: float | None = None
    ratio: float | None = None
    residual: float | None = None
    threshold: float = 0.0

    @property
    def decays(self) -> bool:
        return self.kind != DecayKind.NO_DECAY


@dataclass(frozen=True, eq=False)
class PeriodicFunction:
    """
    **Description**: 1-periodic function ω(t) = Σ_{|ℓ|≤L} c_ℓ e^{2πiℓt}.

    **Fields**:
    - `coeffs`: *np.ndarray[complex]* - `coeffs[i]` is c_{i-L}.
    """
    coeffs: np.ndarray
    lam: complex = 0j
    order: int = 0

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex).ravel()
        if coeffs.size % 2 == 0:
            raise ValueError("Fourier coefficients must be indexed by a symmetric range -L..L")
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def half_range(self) -> int:
        return self.coeffs.size // 2

    def coefficient(self, index: int) -> complex:
        if abs(index) > self.half_range:
            return 0j
        return complex(self.coeffs[index + self.half_range])

    def evaluate(self, t) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        result = np.zeros(t.shape, dtype=complex)
        for i in np.flatnonzero(self.coeffs):
            result += self.coeffs[i] * np.exp(2j * np.pi * (i - self.half_range) * t)
        return result


@dataclass(frozen=True, eq=False)
class HLambdaBasis:
    """
    **Description**: Samples of Σ_ℓ e^{λℓ} ℓ^k φ(t - ℓ) for k = 0..d on a window.

    **Fields**:
    - `samples`: *tuple* - time-domain samples per k.
    - `fourier_samples`: *tuple* - e^{λt} Σ_j C(k,j) t^{k-j} (-1)^j ω_j(t) on the same grid.
    - `consistency`: *float* - max over k of the relative sup distance between the two.
    """
    lam: complex
    samples: tuple
    fourier_samples: tuple = field(repr=False)
    consistency: float = 0.0
