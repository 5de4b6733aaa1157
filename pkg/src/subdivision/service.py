import logging
import math
from typing import Callable, Iterable, Mapping, Tuple

import numpy as np

from src.config.subdivision import Settings, settings as default_settings
from src.generation.factory import ExponentialMaskFactory
from src.subdivision.entity import ExponentialTail, Mask, MaskSchedule, SampledFunction
from src.subdivision.exceptions import EmptyWindowError, LevelRangeError

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]


class SubdivisionService:
    """
    **Description**: Level-dependent subdivision c_{j+1} = S_{a_j} c_j, cascade evaluation of the
    basic limit function and support bookkeeping.

    **Dependencies**:
    - `mask_factory`: *ExponentialMaskFactory* - builds tail masks of exponential schedules.
    - `config`: *Settings* - level limits.

    **Methods**:
    - `mask_at`: level-j mask of a schedule.
    - `subdivide_step`, `run`: the subdivision iteration.
    - `basic_limit`, `refine_limit`: cascade samples of φ (raw and extrapolated).
    - `support_bound`, `dimension_bound`, `shift_range`: support arithmetic.
    - `sample_function`, `integer_shift_sum`: sampled data in and shift sums out.

    **Usage**: Starting data is read as zero outside its window; consumers restrict conclusions
    to the region `support_bound` certifies.
    """
    def __init__(self, mask_factory: ExponentialMaskFactory, config: Settings = default_settings):
        self.mask_factory = mask_factory
        self.config = config

    def mask_at(self, schedule: MaskSchedule, level: int) -> Mask:
        """
        **Description**: Returns a_level: head masks for levels 1..J, then the tail rule.

        **Exceptions**:
        - `LevelRangeError`: If level < 1.
        """
        if level < 1:
            raise LevelRangeError(f"Mask levels start at 1, got {level}")
        if level <= len(schedule.head):
            return schedule.head[level - 1]
        if isinstance(schedule.tail, ExponentialTail):
            return self.mask_factory.mask(schedule.tail.space, level, schedule.tail.level_offset)
        return schedule.head[-1]

    def masks(self, schedule: MaskSchedule, levels: int) -> list[Mask]:
        return [self.mask_at(schedule, j) for j in range(1, levels + 1)]

    @staticmethod
    def subdivide_step(mask: Mask, c: SampledFunction) -> SampledFunction:
        """
        **Description**: (S_a c)_k = Σ_m a_{k-2m} c_m on the next finer grid.

        **How It Works**:
        - Upsamples c by two and convolves with the mask; the result covers every index
          the zero-extended data reaches, starting at 2·lo + mask.lo.

        **Exceptions**:
        - `EmptyWindowError`: If c has no samples.
        """
        if c.size == 0:
            raise EmptyWindowError("Cannot subdivide an empty window")
        upsampled = np.zeros(2 * c.size - 1, dtype=complex)
        upsampled[::2] = c.values
        values = np.convolve(upsampled, mask.coeffs)
        return SampledFunction(c.level + 1, 2 * c.lo + mask.lo, values)

    def run(self, schedule: MaskSchedule, c1: SampledFunction, r: int) -> SampledFunction:
        """
        **Description**: Applies S_{a_r} ... S_{a_1} to integer-grid data c1.

        **Exceptions**:
        - `LevelRangeError`: If r is outside [1, MAX_LEVELS] or c1 is not on the integer grid.
        - `EmptyWindowError`: If c1 is empty.
        """
        if not 1 <= r <= self.config.max_levels:
            raise LevelRangeError(f"Number of levels must lie in [1, {self.config.max_levels}], got {r}")
        if c1.level != 0:
            raise LevelRangeError(f"Starting data must live on the integer grid, got level {c1.level}")

        c = c1
        for j in range(1, r + 1):
            c = self.subdivide_step(self.mask_at(schedule, j), c)
        logger.debug(f"Ran {r} levels: window [{c.lo}, {c.hi}] at level {c.level}")
        return c

    def basic_limit(self, schedule: MaskSchedule, r: int) -> SampledFunction:
        """Cascade samples of φ at level r, trimmed to the support bound."""
        samples = self.run(schedule, SampledFunction.delta(), r)
        return samples.restrict(*self.support_bound(schedule))

    def refine_limit(
            self,
            schedule: MaskSchedule,
            r: int,
            c1: SampledFunction | None = None,
            steps: int = 2,
    ) -> SampledFunction:
        """
        **Description**: Richardson-extrapolated limit samples on the level-r grid.

        Cascade values of a non-interpolatory scheme carry an O(2^{-r}) offset from the limit.
        Levels r..r+steps are sampled at the level-r points and combined by the Richardson table
        T[m][n] = (2^n T[m][n-1] - T[m-1][n-1]) / (2^n - 1), leaving an O(2^{-r(steps+1)}) error.

        **Input**:
        - `c1`: *SampledFunction | None* - starting data, δ when omitted (then the result is
          trimmed to the support bound like `basic_limit`).
        - `steps`: *int* - extrapolation steps; 0 returns the plain cascade.
        """
        start = c1 if c1 is not None else SampledFunction.delta()
        if not 0 <= steps or r + steps > self.config.max_levels:
            raise LevelRangeError(f"Cannot extrapolate {steps} steps past level {r}")

        base = self.run(schedule, start, r)
        # the limit reaches the support bound, past the last non-zero cascade entry
        support_lo, support_hi = self.support_bound(schedule)
        scale = 2 ** r
        lo = min(base.lo, int(np.ceil((start.lo + support_lo) * scale - 1e-9)))
        hi = max(base.hi, int(np.floor((start.hi + support_hi) * scale + 1e-9)))
        indices = np.arange(lo, hi + 1)
        table = []
        c = base
        for m in range(steps + 1):
            if m > 0:
                c = self.subdivide_step(self.mask_at(schedule, r + m), c)
            positions = indices * 2 ** m - c.lo
            inside = (positions >= 0) & (positions < c.size)
            row = np.zeros(indices.size, dtype=complex)
            row[inside] = c.values[positions[inside]]
            table.append(row)

        # in-place Richardson table, column by column
        for n in range(1, steps + 1):
            factor = 2.0 ** n
            for m in range(steps, n - 1, -1):
                table[m] = (factor * table[m] - table[m - 1]) / (factor - 1)

        refined = SampledFunction(r, lo, table[steps])
        if c1 is None:
            refined = refined.restrict(support_lo, support_hi)
        return refined

    def support_bound(self, schedule: MaskSchedule) -> Interval:
        """
        **Description**: [Σ_j 2^{-j} lo_j, Σ_j 2^{-j} hi_j] over all levels, which contains supp(φ).

        Head levels are summed directly; every tail mask shares the support of the first tail
        level (repeated mask, or the [0, dim U] window of exponential masks), so the tail adds
        2^{-J} times that window.
        """
        lo = hi = 0.0
        for j, mask in enumerate(schedule.head, start=1):
            lo += 2.0 ** (-j) * mask.lo
            hi += 2.0 ** (-j) * mask.hi
        head_length = len(schedule.head)
        tail_mask = self.mask_at(schedule, head_length + 1)
        lo += 2.0 ** (-head_length) * tail_mask.lo
        hi += 2.0 ** (-head_length) * tail_mask.hi
        return lo, hi

    @staticmethod
    def dimension_bound(supports: Iterable[Interval]) -> int:
        """Σ_j |supp(φ_j)| rounded up, the bound on dim of the analytic part."""
        total = sum(hi - lo for lo, hi in supports)
        if total <= 0:
            return 0
        return int(math.ceil(total - 1e-12))

    @staticmethod
    def shift_range(support: Interval, window: Interval) -> range:
        """Integers ℓ for which φ(· - ℓ) can be non-zero on the window."""
        return range(math.floor(window[0] - support[1]), math.ceil(window[1] - support[0]) + 1)

    @staticmethod
    def sample_function(f: Callable[[np.ndarray], np.ndarray], window: Interval, level: int) -> SampledFunction:
        return SampledFunction.from_callable(f, window[0], window[1], level)

    @staticmethod
    def integer_shift_sum(
            phi: SampledFunction,
            coefficients: Mapping[int, complex],
            window: Interval,
    ) -> SampledFunction:
        """
        **Description**: Samples of Σ_ℓ c_ℓ φ(t - ℓ) on phi's grid over `window`.

        φ is read as zero outside its sampled window, so the sum is exact on the window only
        when `coefficients` covers `shift_range(support, window)`.

        **Exceptions**:
        - `EmptyWindowError`: If the window holds no grid point.
        """
        scale = 2 ** phi.level
        lo = int(np.ceil(window[0] * scale - 1e-9))
        hi = int(np.floor(window[1] * scale + 1e-9))
        if hi < lo:
            raise EmptyWindowError(f"Window {window} holds no level-{phi.level} grid point")

        indices = np.arange(lo, hi + 1)
        values = np.zeros(indices.size, dtype=complex)
        for shift, coefficient in coefficients.items():
            positions = indices - shift * scale - phi.lo
            inside = (positions >= 0) & (positions < phi.size)
            values[inside] += coefficient * phi.values[positions[inside]]
        return SampledFunction(phi.level, lo, values)

    def partition_of_unity(self, schedule: MaskSchedule, r: int, window: Interval) -> SampledFunction:
        """Σ_ℓ φ(t - ℓ) from the cascade samples of φ."""
        phi = self.basic_limit(schedule, r)
        shifts = self.shift_range(self.support_bound(schedule), window)
        return self.integer_shift_sum(phi, {shift: 1.0 for shift in shifts}, window)
