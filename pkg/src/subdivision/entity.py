from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np
import pandas as pd

from src.config.subdivision import settings
from src.generation.entity import ExponentialSpace
from src.subdivision.exceptions import InvalidMaskError
from src.symbol.entity import LaurentPolynomial


@dataclass(frozen=True, eq=False)
class Mask:
    """
    **Description**: A subdivision mask a_j = {a_{j,k}} stored as its symbol in the sum-2 convention.

    **Fields**:
    - `symbol`: *LaurentPolynomial* - real coefficients summing to 2.
    - `level`: *int | None* - level the mask belongs to, None for a stationary mask.

    **Exceptions**:
    - `InvalidMaskError`: If coefficients are not real or do not sum to 2.
    """
    symbol: LaurentPolynomial
    level: int | None = None

    def __post_init__(self):
        coeffs = self.symbol.coeffs
        scale = float(np.max(np.abs(coeffs)))
        if np.max(np.abs(coeffs.imag)) > settings.mask_real_tol * scale:
            raise InvalidMaskError(f"Mask coefficients must be real, got {coeffs}")
        total = complex(np.sum(coeffs))
        if abs(total - 2) > settings.mask_sum_tol:
            raise InvalidMaskError(f"Mask coefficients must sum to 2, got {total.real:.12g}")
        if self.level is not None and self.level < 1:
            raise InvalidMaskError(f"Mask level must be positive, got {self.level}")
        real = LaurentPolynomial.from_coeffs(coeffs.real, self.symbol.lo)
        object.__setattr__(self, "symbol", real)

    @classmethod
    def from_coeffs(cls, coeffs, lo: int = 0, level: int | None = None) -> "Mask":
        return cls(LaurentPolynomial.from_coeffs(coeffs, lo), level)

    @property
    def lo(self) -> int:
        return self.symbol.lo

    @property
    def hi(self) -> int:
        return self.symbol.hi

    @property
    def coeffs(self) -> np.ndarray:
        return self.symbol.coeffs.real


@dataclass(frozen=True)
class RepeatLast:
    """Levels past the head reuse the last head mask (the stationary case when the head has one mask)."""
    kind: str = "repeat_last"


@dataclass(frozen=True, eq=False)
class ExponentialTail:
    """
    **Description**: Levels past the head use the minimal-degree mask generating `space`,
    with zeros at -e^{-λ 2^{-(j + level_offset)}}.
    """
    space: ExponentialSpace
    level_offset: int = 0
    kind: str = "exponential"


TailRule = Union[RepeatLast, ExponentialTail]


@dataclass(frozen=True, eq=False)
class MaskSchedule:
    """
    **Description**: Level-indexed masks a_1, a_2, ...: an explicit head for levels 1..J
    followed by a tail rule.

    **Fields**:
    - `head`: *Tuple[Mask, ...]* - non-empty.
    - `tail`: *RepeatLast | ExponentialTail*

    **Usage**: Defines both the subdivision scheme and the Fourier product Π a_j(2^{-j}y);
    resolve the mask of any level with `SubdivisionService.mask_at`.
    """
    head: Tuple[Mask, ...]
    tail: TailRule = RepeatLast()

    def __post_init__(self):
        head = tuple(self.head)
        if not head:
            raise InvalidMaskError("A mask schedule needs at least one head mask")
        object.__setattr__(self, "head", head)

    @classmethod
    def stationary(cls, mask: Mask) -> "MaskSchedule":
        return cls((mask,), RepeatLast())

    @property
    def is_stationary(self) -> bool:
        return isinstance(self.tail, RepeatLast)


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """
    **Description**: Values on the dyadic grid 2^{-level}ℤ over a contiguous window;
    `values[i]` sits at (lo + i) · 2^{-level}. Outside the window the function is read as zero.
    """
    level: int
    lo: int
    values: np.ndarray

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"Grid level must be non-negative, got {self.level}")
        values = np.array(self.values, dtype=complex).ravel()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "lo", int(self.lo))

    @classmethod
    def delta(cls, level: int = 0) -> "SampledFunction":
        return cls(level, 0, np.ones(1))

    @classmethod
    def from_callable(cls, f: Callable[[np.ndarray], np.ndarray], t_lo: float, t_hi: float, level: int) -> "SampledFunction":
        scale = 2 ** level
        lo = int(np.ceil(t_lo * scale - 1e-9))
        hi = int(np.floor(t_hi * scale + 1e-9))
        t = np.arange(lo, hi + 1) / scale
        return cls(level, lo, np.asarray(f(t), dtype=complex) * np.ones_like(t))

    @property
    def size(self) -> int:
        return self.values.size

    @property
    def hi(self) -> int:
        return self.lo + self.values.size - 1

    @property
    def step(self) -> float:
        return 2.0 ** (-self.level)

    @property
    def grid(self) -> np.ndarray:
        return (self.lo + np.arange(self.values.size)) * self.step

    @property
    def window(self) -> Tuple[float, float]:
        return self.lo * self.step, self.hi * self.step

    def value_at(self, t: float) -> complex:
        index = round(t * 2 ** self.level) - self.lo
        if abs(t * 2 ** self.level - round(t * 2 ** self.level)) > 1e-9:
            raise ValueError(f"{t} is not on the level-{self.level} grid")
        if 0 <= index < self.values.size:
            return complex(self.values[index])
        return 0j

    def restrict(self, t_lo: float, t_hi: float) -> "SampledFunction":
        scale = 2 ** self.level
        lo = max(self.lo, int(np.ceil(t_lo * scale - 1e-9)))
        hi = min(self.hi, int(np.floor(t_hi * scale + 1e-9)))
        if hi < lo:
            return SampledFunction(self.level, lo, np.zeros(0))
        return SampledFunction(self.level, lo, self.values[lo - self.lo:hi - self.lo + 1])

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        return SampledFunction(self.level, self.lo, values)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.grid, "re": self.values.real, "im": self.values.imag})
