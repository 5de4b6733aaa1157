import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.special import comb, factorial

from src.config.fourier import Settings, settings as default_settings
from src.fourier.dto import ComplexDTO, StrangFixReportDTO, StrangFixRowDTO
from src.fourier.entity import DecayKind, DecaySequence, DecayVerdict, HLambdaBasis, PeriodicFunction, ProductDerivatives
from src.fourier.exceptions import (
    DecayRequiredError,
    InconclusiveDecayError,
    NormalizationError,
    PoissonConsistencyError,
    TruncationRangeError,
)
from src.subdivision.entity import Mask, MaskSchedule, RepeatLast, SampledFunction
from src.subdivision.service import Interval, SubdivisionService
from src.symbol.service import SymbolService

logger = logging.getLogger(__name__)

# radius of the disc the Cauchy estimate for tail derivatives uses
CAUCHY_RADIUS = 1.0


def log_linear_fit(x: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    """Least-squares line y ≈ slope·x + intercept and its rms residual."""
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return float(slope), float(intercept), residual


class FourierService:
    """
    **Description**: Fourier-side analysis of a mask schedule: the truncated product
    φ̂(y) = Π_j a_j(2^{-j}y) and its derivatives, decay sequences φ̂^{(k)}(-iλ/2π + ℓ), their
    classification, the periodic factors ω_k and the H_λ basis.

    **Dependencies**:
    - `subdivision_service`: *SubdivisionService* - level masks, cascade samples and supports.
    - `symbol_service`: *SymbolService* - symbol evaluation.

    **Usage**: Poisson summation uses the plus sign, Σ_ℓ g(t - ℓ) = Σ_ℓ ĝ(ℓ) e^{2πiℓt};
    `h_lambda_basis` checks it against cascade samples.
    """
    def __init__(
            self,
            subdivision_service: SubdivisionService,
            symbol_service: SymbolService,
            config: Settings = default_settings,
    ):
        self.subdivision_service = subdivision_service
        self.symbol_service = symbol_service
        self.config = config

    def default_depth(self, reach: float) -> int:
        return self.config.base_depth + math.ceil(math.log2(1 + reach))

    def _resolve_depth(self, depth: int | None, reach: float) -> int:
        depth = depth if depth is not None else self.default_depth(reach)
        if not 1 <= depth <= self.config.max_depth:
            raise TruncationRangeError(f"Product depth must lie in [1, {self.config.max_depth}], got {depth}")
        return depth

    def _checked_masks(self, schedule: MaskSchedule, depth: int) -> List[Mask]:
        """Masks of levels 1..depth+1; the last one stands for the tail beyond the truncation."""
        masks = self.subdivision_service.masks(schedule, depth + 1)
        for j, mask in enumerate(masks, start=1):
            at_zero = 0.5 * float(np.sum(mask.coeffs))
            if abs(at_zero - 1) > self.config.normalization_tol:
                raise NormalizationError(f"Level-{j} mask has a_j(0) = {at_zero:.12g}, expected 1")
        return masks

    def _tail_bound(self, schedule: MaskSchedule, tail_mask: Mask, ys: np.ndarray, depth: int) -> np.ndarray:
        """
        **Description**: Bound ε(y) on |R(z) - 1| for the tail R = Π_{j>depth} a_j(2^{-j}·) over the
        disc |z - y| ≤ CAUCHY_RADIUS.

        |a(x) - 1| ≤ |x| · π Σ_m |c_m| |m| e^{2π|m||Im x|} for a sum-2 mask, summed as a
        geometric series over the tail levels. Exponential tails vary with the level, so their
        constant carries a factor 2.
        """
        m = np.abs(tail_mask.symbol.exponents).astype(float)
        c = np.abs(tail_mask.coeffs)
        reach = np.abs(ys) + CAUCHY_RADIUS
        imag_reach = (np.abs(ys.imag) + CAUCHY_RADIUS) * 2.0 ** (-(depth + 1))
        lipschitz = math.pi * np.sum(c * m * np.exp(2 * math.pi * np.outer(imag_reach, m)), axis=1)
        safety = 1.0 if isinstance(schedule.tail, RepeatLast) else 2.0
        return np.expm1(safety * 2.0 ** (-depth) * reach * lipschitz)

    def _product(self, schedule: MaskSchedule, ys: np.ndarray, d: int, depth: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        **Description**: Derivatives of the truncated product at every y, shape (d+1, len(ys)),
        and the per-order error bounds, same shape.

        **How It Works**:
        - Each factor y ↦ a_j(2^{-j}y) is expanded into its Taylor coefficients
          2^{-jn} a_j^{(n)}(2^{-j}y) / n! for n ≤ d.
        - Truncated series are multiplied factor by factor (Leibniz rule).
        - The tail error follows from `_tail_bound` and Cauchy estimates for R^{(n)}.
        """
        masks = self._checked_masks(schedule, depth)
        orders = np.arange(d + 1)
        taylor = np.zeros((d + 1, ys.size), dtype=complex)
        taylor[0] = 1.0

        for j, mask in enumerate(masks[:depth], start=1):
            m = mask.symbol.exponents.astype(float)
            x = ys * 2.0 ** (-j)
            phase = np.exp(-2j * np.pi * np.outer(x, m))
            weights = 0.5 * mask.coeffs[None, :] * (-2j * np.pi * m[None, :]) ** orders[:, None]
            factor = (weights @ phase.T) * (2.0 ** (-j * orders) / factorial(orders))[:, None]

            product = np.zeros_like(taylor)
            for a in range(d + 1):
                product[a] = np.sum(taylor[:a + 1] * factor[a::-1], axis=0)
            taylor = product

        values = taylor * factorial(orders)[:, None]

        epsilon = self._tail_bound(schedule, masks[depth], ys, depth)
        magnitudes = np.abs(values)
        bounds = np.zeros(values.shape, dtype=float)
        for k in range(d + 1):
            for n in range(k + 1):
                bounds[k] += comb(k, n) * factorial(n) * magnitudes[k - n]
        bounds *= epsilon[None, :]
        return values, bounds

    def phi_hat_derivs(self, schedule: MaskSchedule, y: complex, d: int = 0, depth: int | None = None) -> ProductDerivatives:
        """
        **Description**: [φ̂(y), ..., φ̂^{(d)}(y)] from the truncated product with a tail error bound.

        **Input**:
        - `depth`: *int | None* - number of factors, 48 + ceil(log2(1 + |y|)) by default.

        **Exceptions**:
        - `NormalizationError`: If some a_j(0) ≠ 1.
        - `TruncationRangeError`: If depth is outside [1, FOURIER_MAX_DEPTH].
        """
        if d < 0:
            raise TruncationRangeError(f"Derivative order must be non-negative, got {d}")
        y = complex(y)
        depth = self._resolve_depth(depth, abs(y))
        values, bounds = self._product(schedule, np.array([y]), d, depth)
        return ProductDerivatives(y=y, values=values[:, 0], error_bound=float(np.max(bounds)), depth=depth)

    def decay_sequences(
            self,
            schedule: MaskSchedule,
            lam: complex,
            d: int,
            half_range: int,
            depth: int | None = None,
    ) -> List[DecaySequence]:
        """Decay sequences of orders 0..d from a single pass over the product."""
        if not 4 <= half_range <= self.config.max_range:
            raise TruncationRangeError(f"Index range L must lie in [4, {self.config.max_range}], got {half_range}")
        if d < 0:
            raise TruncationRangeError(f"Derivative order must be non-negative, got {d}")

        alpha = -1j * complex(lam) / (2 * math.pi)
        ys = alpha + np.arange(-half_range, half_range + 1)
        depth = self._resolve_depth(depth, float(np.max(np.abs(ys))))
        values, bounds = self._product(schedule, ys, d, depth)
        logger.debug(f"Decay sequences λ={lam} d={d} L={half_range} depth={depth}")
        return [
            DecaySequence(complex(lam), k, values[k], float(np.max(bounds[k])))
            for k in range(d + 1)
        ]

    def decay_sequence(
            self,
            schedule: MaskSchedule,
            lam: complex,
            k: int,
            half_range: int,
            depth: int | None = None,
    ) -> DecaySequence:
        """entries[ℓ] = φ̂^{(k)}(-iλ/2π + ℓ) for ℓ = -L..L."""
        return self.decay_sequences(schedule, lam, k, half_range, depth)[k]

    def classify_decay(self, sequence: DecaySequence | Sequence[DecaySequence]) -> DecayVerdict:
        """
        **Description**: Classifies a decay sequence (or several, combined) as finitely supported,
        exponentially decaying or not decaying.

        **How It Works**:
        - Entries at or below max(truncation error, DECAY_REL_TOL·max, DECAY_ZERO_FLOOR) count as zero.
        - With at least DECAY_MIN_POINTS non-zero entries at |ℓ| ≥ 2, log|entry| is fitted against
          |ℓ| and against log|ℓ|; the exponential model wins when its slope is below log(1 - δ),
          its residual is within DECAY_MAX_RESIDUAL and it fits no worse than the power law.
        - Otherwise the non-zero entries form a finite support when each clears the threshold by
          DECAY_SUPPORT_GAP.

        **Exceptions**:
        - `InconclusiveDecayError`: If neither rule applies.
        """
        if isinstance(sequence, DecaySequence):
            return self._classify_one(sequence)
        verdicts = [self._classify_one(item) for item in sequence]
        return self.combine_verdicts(verdicts)

    def _classify_one(self, sequence: DecaySequence) -> DecayVerdict:
        config = self.config
        magnitudes = np.abs(sequence.entries)
        indices = sequence.indices
        threshold = max(sequence.truncation_error, config.rel_tol * float(np.max(magnitudes)), config.zero_floor)
        above = magnitudes > threshold
        tail = above & (np.abs(indices) >= 2)

        if np.count_nonzero(tail) >= config.min_points:
            distance = np.abs(indices[tail]).astype(float)
            logs = np.log(magnitudes[tail])
            slope, intercept, residual = log_linear_fit(distance, logs)
            _, _, power_residual = log_linear_fit(np.log(distance), logs)
            if slope < math.log(1 - config.delta) and residual <= config.max_residual and residual <= power_residual:
                verdict = DecayVerdict(
                    kind=DecayKind.EXPONENTIAL_DECAY,
                    constant=math.exp(intercept),
                    ratio=math.exp(slope),
                    residual=residual,
                    threshold=threshold,
                )
            else:
                verdict = DecayVerdict(kind=DecayKind.NO_DECAY, residual=residual, threshold=threshold)
            logger.info(f"λ={sequence.lam} k={sequence.order}: {verdict.kind.value} (slope {slope:.4g}, residual {residual:.3g})")
            return verdict

        support = tuple(int(i) for i in indices[above])
        if np.all(magnitudes[above] > threshold * config.support_gap):
            logger.info(f"λ={sequence.lam} k={sequence.order}: finitely supported on {support}")
            return DecayVerdict(kind=DecayKind.FINITELY_SUPPORTED, support=support, threshold=threshold)

        diagnostics = {
            "threshold": threshold,
            "above_threshold": len(support),
            "tail_points": int(np.count_nonzero(tail)),
            "half_range": sequence.half_range,
        }
        logger.warning(f"λ={sequence.lam} k={sequence.order}: inconclusive decay {diagnostics}")
        raise InconclusiveDecayError(
            f"Cannot classify the order-{sequence.order} sequence at λ={sequence.lam}: "
            f"{len(support)} entries above {threshold:.3g} but too few to fit a decay rate",
            diagnostics,
        )

    @staticmethod
    def combine_verdicts(verdicts: Sequence[DecayVerdict]) -> DecayVerdict:
        """A family decays when every member does; supports are united and the slowest rate kept."""
        threshold = max((v.threshold for v in verdicts), default=0.0)
        if any(v.kind == DecayKind.NO_DECAY for v in verdicts):
            return DecayVerdict(kind=DecayKind.NO_DECAY, threshold=threshold)
        exponential = [v for v in verdicts if v.kind == DecayKind.EXPONENTIAL_DECAY]
        if not exponential:
            support = sorted(set().union(*(v.support for v in verdicts)))
            return DecayVerdict(kind=DecayKind.FINITELY_SUPPORTED, support=tuple(support), threshold=threshold)
        return DecayVerdict(
            kind=DecayKind.EXPONENTIAL_DECAY,
            constant=max(v.constant for v in exponential),
            ratio=max(v.ratio for v in exponential),
            residual=max(v.residual for v in exponential),
            threshold=threshold,
        )

    def omegas(
            self,
            schedule: MaskSchedule,
            lam: complex,
            d: int,
            half_range: int,
            depth: int | None = None,
    ) -> List[PeriodicFunction]:
        """
        **Description**: Periodic factors ω_0..ω_d with c_ℓ = (-1/(2πi))^k φ̂^{(k)}(-iλ/2π + ℓ),
        so that ω_k(t) = Σ_ℓ (t - ℓ)^k ψ(t - ℓ) for ψ = e^{-λ·}φ.

        **Exceptions**:
        - `DecayRequiredError`: If some order up to d does not decay.
        - `InconclusiveDecayError`: Propagated from the classification.
        """
        sequences = self.decay_sequences(schedule, lam, d, half_range, depth)
        for sequence in sequences:
            if not self._classify_one(sequence).decays:
                raise DecayRequiredError(
                    f"The order-{sequence.order} decay sequence at λ={lam} does not decay; ω_{sequence.order} is not analytic"
                )
        return [
            PeriodicFunction((-1 / (2j * math.pi)) ** k * sequence.entries, complex(lam), k)
            for k, sequence in enumerate(sequences)
        ]

    def omega(
            self,
            schedule: MaskSchedule,
            lam: complex,
            k: int,
            half_range: int,
            depth: int | None = None,
    ) -> PeriodicFunction:
        return self.omegas(schedule, lam, k, half_range, depth)[k]

    def h_lambda_basis(
            self,
            schedule: MaskSchedule,
            lam: complex,
            d: int,
            window: Interval,
            r: int,
            depth: int | None = None,
            half_range: int = 64,
            tol: float | None = None,
    ) -> HLambdaBasis:
        """
        **Description**: Samples of Σ_ℓ e^{λℓ} ℓ^k φ(t - ℓ), k = 0..d, on the level-r grid of `window`,
        evaluated twice and compared.

        **How It Works**:
        - Time domain: extrapolated cascade samples of φ (`refine_limit`) summed over every shift
          whose support meets the window.
        - Fourier domain: e^{λt} Σ_j C(k,j) t^{k-j} (-1)^j ω_j(t).
        - `consistency` is max_k sup|time - fourier| / max(1, sup|time|).

        **Exceptions**:
        - `PoissonConsistencyError`: If consistency exceeds `tol` (POISSON_CONSISTENCY_TOL).
        - `DecayRequiredError`: If some order up to d does not decay.
        """
        tol = tol if tol is not None else self.config.consistency_tol
        omegas = self.omegas(schedule, lam, d, half_range, depth)

        phi = self.subdivision_service.refine_limit(schedule, r)
        shifts = self.subdivision_service.shift_range(self.subdivision_service.support_bound(schedule), window)

        samples: List[SampledFunction] = []
        fourier_samples: List[SampledFunction] = []
        consistency = 0.0
        for k in range(d + 1):
            coefficients = {shift: np.exp(lam * shift) * float(shift) ** k for shift in shifts}
            time_domain = self.subdivision_service.integer_shift_sum(phi, coefficients, window)
            t = time_domain.grid
            series = sum(comb(k, j) * t ** (k - j) * (-1) ** j * omegas[j].evaluate(t) for j in range(k + 1))
            fourier_domain = time_domain.with_values(np.exp(lam * t) * series)

            scale = max(1.0, float(np.max(np.abs(time_domain.values))))
            distance = float(np.max(np.abs(time_domain.values - fourier_domain.values))) / scale
            consistency = max(consistency, distance)
            samples.append(time_domain)
            fourier_samples.append(fourier_domain)

        logger.info(f"H_λ basis λ={lam} d={d}: consistency {consistency:.3e}")
        if consistency > tol:
            raise PoissonConsistencyError(
                f"Time-domain and Fourier-domain H_λ samples differ by {consistency:.3e} > {tol:.1e} at λ={lam}"
            )
        return HLambdaBasis(complex(lam), tuple(samples), tuple(fourier_samples), consistency)

    def product_at_zero(self, schedule: MaskSchedule, lam: complex, depth: int | None = None) -> complex:
        """φ̂(-iλ/2π) as Π_j a^{[j]}(e^{-λ 2^{-j}}) / 2."""
        depth = self._resolve_depth(depth, abs(lam) / (2 * math.pi))
        result = 1 + 0j
        for j, mask in enumerate(self.subdivision_service.masks(schedule, depth), start=1):
            result *= 0.5 * self.symbol_service.eval_z(mask.symbol, np.exp(-complex(lam) * 2.0 ** (-j)))
        return complex(result)

    def strang_fix_report(
            self,
            schedule: MaskSchedule,
            lam: complex,
            d: int,
            half_range: int,
            depth: int | None = None,
    ) -> StrangFixReportDTO:
        """
        **Description**: Checks that φ̂^{(k)}(-iλ/2π + ℓ) vanishes for every ℓ ≠ 0 and k ≤ d and that
        φ̂(-iλ/2π) ≠ 0.
        """
        sequences = self.decay_sequences(schedule, lam, d, half_range, depth)
        rows = []
        for sequence in sequences:
            magnitudes = np.abs(sequence.entries)
            threshold = max(sequence.truncation_error, self.config.zero_floor, self.config.rel_tol * float(np.max(magnitudes)))
            off_zero = float(np.max(np.delete(magnitudes, sequence.half_range)))
            rows.append(StrangFixRowDTO(
                order=sequence.order,
                at_zero=ComplexDTO.of(sequence.at(0)),
                max_off_zero=off_zero,
                threshold=threshold,
                vanishes=off_zero <= threshold,
            ))
        base = sequences[0]
        nonvanishing = abs(base.at(0)) > max(base.truncation_error, self.config.zero_floor)
        verdict = nonvanishing and all(row.vanishes for row in rows)
        logger.info(f"Strang-Fix λ={lam} d={d}: {verdict}")
        return StrangFixReportDTO(lam=ComplexDTO.of(lam), rows=rows, nonvanishing_at_zero=nonvanishing, verdict=verdict)
