import logging
import math
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import scipy.linalg

from src.config.generation import Settings, settings as default_settings
from src.fourier.entity import DecayKind
from src.fourier.exceptions import InconclusiveDecayError
from src.fourier.service import FourierService
from src.generation.dto import (
    AuditEntryDTO,
    AuditReportDTO,
    GenerationReportDTO,
    ZeroConditionRowDTO,
    ZeroConditionTableDTO,
)
from src.generation.entity import SEPARATION_TOL, ExponentialSpace, distance_mod_2pi_i
from src.generation.exceptions import FitWindowError, NonRealSpectrumError, RankDeficientFitError
from src.generation.factory import ExponentialMaskFactory
from src.subdivision.entity import ExponentialTail, Mask, MaskSchedule, SampledFunction
from src.subdivision.service import Interval, SubdivisionService
from src.symbol.entity import LaurentPolynomial
from src.symbol.service import SymbolService

logger = logging.getLogger(__name__)

# extra integers sampled on each side of the influence window
START_MARGIN = 2


class GenerationService:
    """
    **Description**: Generalized zero conditions, construction of schedules generating an exponential
    space U, and numerical checks that subdivision limits stay in U.

    **Dependencies**:
    - `symbol_service`: *SymbolService* - symbol evaluation and derivatives.
    - `subdivision_service`: *SubdivisionService* - level masks, runs and supports.
    - `fourier_service`: *FourierService* - decay classification for audits.
    - `mask_factory`: *ExponentialMaskFactory* - minimal-degree masks.

    **Methods**:
    - `check_zero_conditions`: D^k a^{[j]}(-e^{-λ2^{-j}}) = 0 table with non-degeneracy at +e^{-λ2^{-j}}.
    - `construct_schedule`, `drop_factor`: schedules with and without a prescribed factor.
    - `verify_generation`: least-squares membership of limits in U.
    - `analytic_limit_audit`: decay classification over a λ grid.
    """
    def __init__(
            self,
            symbol_service: SymbolService,
            subdivision_service: SubdivisionService,
            fourier_service: FourierService,
            mask_factory: ExponentialMaskFactory,
            config: Settings = default_settings,
    ):
        self.symbol_service = symbol_service
        self.subdivision_service = subdivision_service
        self.fourier_service = fourier_service
        self.mask_factory = mask_factory
        self.config = config

    def _evaluate_with_scale(self, p: LaurentPolynomial, z: complex) -> Tuple[float, float]:
        """|p(z)| together with Σ|c_m||z|^m, the magnitude rounding errors are relative to."""
        value = abs(self.symbol_service.eval_z(p, z))
        magnitude = LaurentPolynomial.from_coeffs(np.abs(p.coeffs), p.lo)
        scale = abs(self.symbol_service.eval_z(magnitude, abs(z))) if not p.is_zero else 0.0
        return float(value), float(scale)

    def check_zero_conditions(
            self,
            schedule: MaskSchedule,
            lam: complex,
            d: int,
            levels: Iterable[int],
            tol: float | None = None,
            level_offset: int | None = None,
    ) -> ZeroConditionTableDTO:
        """
        **Description**: For every level j and k = 0..d, evaluates |D^k a^{[j]}(-e^{-λ2^{-(j+offset)}})|
        (zero condition) and |D^k a^{[j]}(e^{-λ2^{-(j+offset)}})| (non-degeneracy).

        **How It Works**:
        - A value counts as zero when it is at most tol times Σ|c_m||z|^m of the same derivative,
          the size of the terms that cancel.
        """
        lam = complex(lam)
        tol = tol if tol is not None else self.config.zero_tol
        offset = level_offset if level_offset is not None else self.config.level_offset
        rows = []
        for j in levels:
            symbol = self.subdivision_service.mask_at(schedule, j).symbol
            point = self.mask_factory.zero_point(lam, j, offset)
            for k in range(d + 1):
                derivative = self.symbol_service.derivative_z(symbol, k)
                zero_value, zero_scale = self._evaluate_with_scale(derivative, point)
                other_value, other_scale = self._evaluate_with_scale(derivative, -point)
                rows.append(ZeroConditionRowDTO(
                    level=j,
                    order=k,
                    zero_value=zero_value,
                    zero_holds=zero_value <= tol * zero_scale,
                    nondegenerate_value=other_value,
                    nondegenerate=other_value > tol * other_scale,
                ))
        table = ZeroConditionTableDTO(lam=(lam.real, lam.imag), order=d, tol=tol, rows=rows)
        logger.info(f"Zero conditions λ={lam} d={d}: {table.verdict}")
        return table

    def construct_schedule(
            self,
            space: ExponentialSpace,
            head_length: int = 1,
            level_offset: int | None = None,
    ) -> MaskSchedule:
        """
        **Description**: Minimal-degree schedule with a^{[j]}(z) = c_j Π_λ (z + e^{-λ2^{-j}})^{k(λ)+1}
        and a^{[j]}(1) = 2; levels past the head continue with the same rule.

        **Exceptions**:
        - `NonRealSpectrumError`: If the spectrum is not closed under conjugation.
        - `DegenerateLambdaError`: If some level's factor vanishes at z = 1.
        """
        if head_length < 1:
            raise ValueError(f"Head length must be positive, got {head_length}")
        if not space.is_conjugation_closed:
            raise NonRealSpectrumError(f"Spectrum {space.spectrum} is not closed under conjugation")
        offset = level_offset if level_offset is not None else self.config.level_offset
        head = tuple(self.mask_factory.mask(space, j, offset) for j in range(1, head_length + 1))
        logger.info(f"Constructed schedule for spectrum {space.spectrum}: dim U = {space.dim}, head {head_length}")
        return MaskSchedule(head, ExponentialTail(space, offset))

    def drop_factor(self, schedule: MaskSchedule, space: ExponentialSpace, lam: complex) -> MaskSchedule:
        """
        **Description**: The schedule built for U with one power of (z + e^{-λ2^{-j}}) removed
        (and of its conjugate factor, to keep masks real).

        When nothing is left the degenerate mask [2] is used.
        """
        target = complex(lam)
        if space.multiplicity(target) is None:
            raise ValueError(f"λ={lam} is not in the spectrum {space.spectrum}")
        reduced = []
        for mu, mult in space.spectrum:
            hit = abs(mu - target) < SEPARATION_TOL or abs(mu - target.conjugate()) < SEPARATION_TOL
            if not hit:
                reduced.append((mu, mult))
            elif mult > 0:
                reduced.append((mu, mult - 1))
        if not reduced:
            return MaskSchedule.stationary(Mask.from_coeffs([2.0]))

        offset = schedule.tail.level_offset if isinstance(schedule.tail, ExponentialTail) else self.config.level_offset
        return self.construct_schedule(ExponentialSpace(tuple(reduced)), len(schedule.head), offset)

    def start_window(self, schedule: MaskSchedule, fit_window: Interval) -> Tuple[int, int]:
        """Integers whose data reach `fit_window` after subdivision, plus a margin."""
        support_lo, support_hi = self.subdivision_service.support_bound(schedule)
        return (
            math.floor(fit_window[0] - support_hi) - START_MARGIN,
            math.ceil(fit_window[1] - support_lo) + START_MARGIN,
        )

    def verify_generation(
            self,
            schedule: MaskSchedule,
            space: ExponentialSpace,
            r: int,
            fit_window: Interval,
            tol: float | None = None,
    ) -> GenerationReportDTO:
        """
        **Description**: Checks that the scheme maps integer samples of every basis function
        t^a e^{λt} of U to level-r samples of an element of U.

        **How It Works**:
        - Starting data cover `start_window`, so zero extension cannot reach `fit_window`.
        - Level-r samples on `fit_window` are fitted by least squares against the basis of U, with
          columns scaled to unit sup-norm; the residual is ‖y - Bc‖ / ‖y‖, maximized over basis starts.

        **Exceptions**:
        - `FitWindowError`: If the fit window is empty.
        - `RankDeficientFitError`: If the scaled basis is rank deficient on the fit window.
        """
        tol = tol if tol is not None else self.config.generation_tol
        if not fit_window[0] < fit_window[1]:
            raise FitWindowError(f"Fit window {fit_window} is empty")

        start_lo, start_hi = self.start_window(schedule, fit_window)
        integers = np.arange(start_lo, start_hi + 1).astype(float)
        starts = space.evaluate(integers)

        residuals = []
        design = None
        for column, (lam, power) in enumerate(space.basis):
            c1 = SampledFunction(0, start_lo, starts[:, column])
            samples = self.subdivision_service.run(schedule, c1, r).restrict(*fit_window)
            if samples.size == 0:
                raise FitWindowError(f"Fit window {fit_window} holds no level-{r} sample")
            if design is None:
                design = space.evaluate(samples.grid)
                scales = np.max(np.abs(design), axis=0)
                scales[scales == 0] = 1.0
                design = design / scales
                rank = np.linalg.matrix_rank(design)
                if rank < space.dim:
                    raise RankDeficientFitError(
                        f"Basis of U has rank {rank} < {space.dim} on {fit_window} at level {r}"
                    )
            coeffs, *_ = scipy.linalg.lstsq(design, samples.values)
            norm = np.linalg.norm(samples.values)
            misfit = np.linalg.norm(samples.values - design @ coeffs)
            residuals.append(float(misfit / norm) if norm > 0 else float(misfit))
            logger.debug(f"Start t^{power} e^({lam} t): residual {residuals[-1]:.3e}")

        residual = max(residuals)
        verdict = residual <= tol
        logger.info(f"Generation of U (dim {space.dim}) at r={r} on {fit_window}: residual {residual:.3e}, {verdict}")
        return GenerationReportDTO(
            residual=residual,
            residuals=residuals,
            window=fit_window,
            start_window=(start_lo, start_hi),
            levels=r,
            tol=tol,
            verdict=verdict,
        )

    def analytic_limit_audit(
            self,
            schedule: MaskSchedule,
            lams: Sequence[complex],
            d: int,
            half_range: int,
            depth: int | None = None,
    ) -> AuditReportDTO:
        """
        **Description**: Classifies the decay sequences of orders 0..d at every λ of the grid.

        **How It Works**:
        - N is the largest mask span and C the largest ‖a_j‖_∞ over the head and first tail level.
        - λ with max(|e^λ|, |e^{-λ}|) beyond OVERFLOW_GUARD, or whose classification is inconclusive,
          are listed rather than guessed.
        - Stationary schedules pass when every support has at most one point and appears only at
          λ ≡ 0 (mod 2πi); non-stationary ones when the total non-zero count is at most N.
        """
        levels = len(schedule.head) + 1
        masks = self.subdivision_service.masks(schedule, levels)
        degree = max(mask.symbol.span for mask in masks)
        sup_norm = max(0.5 * self.symbol_service.sup_norm(mask.symbol) for mask in masks)

        entries: List[AuditEntryDTO] = []
        inconclusive: List[Tuple[float, float]] = []
        guard = self.fourier_service.config.overflow_guard
        for lam in lams:
            lam = complex(lam)
            label = (lam.real, lam.imag)
            if max(abs(np.exp(lam)), abs(np.exp(-lam))) > guard:
                logger.warning(f"λ={lam} exceeds the overflow guard {guard:.0e}; skipped")
                entries.append(AuditEntryDTO(lam=label, kinds=[], support=[], inconclusive="overflow guard"))
                inconclusive.append(label)
                continue
            try:
                sequences = self.fourier_service.decay_sequences(schedule, lam, d, half_range, depth)
                verdicts = [self.fourier_service.classify_decay(sequence) for sequence in sequences]
            except InconclusiveDecayError as error:
                entries.append(AuditEntryDTO(lam=label, kinds=[], support=[], inconclusive=str(error)))
                inconclusive.append(label)
                continue
            support = sorted(set().union(*(
                verdict.support for verdict in verdicts if verdict.kind == DecayKind.FINITELY_SUPPORTED
            )))
            entries.append(AuditEntryDTO(lam=label, kinds=[verdict.kind.value for verdict in verdicts], support=support))

        nonzero_count = sum(len(entry.support) for entry in entries)
        if schedule.is_stationary:
            verdict = all(
                len(entry.support) <= 1
                and (not entry.support or distance_mod_2pi_i(complex(*entry.lam)) < SEPARATION_TOL)
                for entry in entries
            )
        else:
            verdict = nonzero_count <= degree
        verdict = verdict and not inconclusive
        logger.info(f"Audit over {len(entries)} λ: N={degree}, non-zero count {nonzero_count}, verdict {verdict}")
        return AuditReportDTO(
            stationary=schedule.is_stationary,
            degree=degree,
            sup_norm=sup_norm,
            entries=entries,
            nonzero_count=nonzero_count,
            inconclusive=inconclusive,
            verdict=verdict,
        )
