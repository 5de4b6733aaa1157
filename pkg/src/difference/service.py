import logging
from typing import Callable, Sequence, Tuple

import numpy as np
import scipy.linalg

from src.config.difference import Settings, settings as default_settings
from src.difference.entity import ExponentialPolynomialFit
from src.difference.exceptions import WindowTooSmallError
from src.subdivision.entity import SampledFunction
from src.subdivision.exceptions import EmptyWindowError

logger = logging.getLogger(__name__)


class DifferenceService:
    """
    **Description**: The exponential difference operator ∇_λ f = e^{-λ} f(· + 1) - f on dyadic samples.

    **Methods**:
    - `nabla`, `nabla_power`: single and repeated application.
    - `eliminate`: isolates one exponential component of an element of H.
    - `fit_exponential_polynomial`: least-squares recovery of π·p·e^{λt}.
    - `relative_sup`, `is_annihilated`: the "equals zero" test on surviving windows.

    **Usage**: Each application consumes one unit of window on the right.
    """
    def __init__(self, config: Settings = default_settings):
        self.config = config

    @staticmethod
    def nabla(lam: complex, f: SampledFunction) -> SampledFunction:
        """
        **Exceptions**:
        - `WindowTooSmallError`: If the window does not exceed one unit.
        """
        shift = 2 ** f.level
        if f.size <= shift:
            raise WindowTooSmallError(f"Window {f.window} is too short for a unit shift")
        values = np.exp(-complex(lam)) * f.values[shift:] - f.values[:-shift]
        return SampledFunction(f.level, f.lo, values)

    def nabla_power(self, lam: complex, n: int, f: SampledFunction) -> SampledFunction:
        if n < 1:
            raise ValueError(f"Power of ∇ must be positive, got {n}")
        if f.size <= n * 2 ** f.level:
            raise WindowTooSmallError(f"Window {f.window} is too short for {n} unit shifts")
        for _ in range(n):
            f = self.nabla(lam, f)
        return f

    def eliminate(self, f: SampledFunction, components: Sequence[Tuple[complex, int]], keep: int) -> SampledFunction:
        """
        **Description**: Applies ∇_{λ_j}^{d_j + 1} for every component j ≠ keep, in list order.

        For f = Σ_j e^{λ_j t} Σ_k p_{j,k}(t) π_{j,k}(t) what survives is the e^{λ_keep t} component
        with polynomials of unchanged degrees.

        **Exceptions**:
        - `WindowTooSmallError`: If the window cannot absorb Σ_{j≠keep} (d_j + 1) unit shifts.
        """
        if not 0 <= keep < len(components):
            raise IndexError(f"Component index {keep} is outside 0..{len(components) - 1}")
        shifts = sum(d + 1 for j, (_, d) in enumerate(components) if j != keep)
        if f.size <= shifts * 2 ** f.level:
            raise WindowTooSmallError(f"Window {f.window} is too short for {shifts} unit shifts")

        for j, (lam, d) in enumerate(components):
            if j != keep:
                f = self.nabla_power(lam, d + 1, f)
        logger.debug(f"Eliminated {len(components) - 1} components, kept λ={components[keep][0]}")
        return f

    @staticmethod
    def fit_exponential_polynomial(
            f: SampledFunction,
            lam: complex,
            degree: int,
            modulation: Callable[[np.ndarray], np.ndarray] | None = None,
    ) -> ExponentialPolynomialFit:
        """
        **Description**: Fits f(t) ≈ π(t) Σ_{a≤degree} c_a t^a e^{λt} by least squares.

        **Input**:
        - `modulation`: *Callable | None* - the periodic factor π, 1 when omitted.

        **How It Works**:
        - Columns are scaled to unit sup-norm on the samples before solving.
        """
        if f.size == 0:
            raise EmptyWindowError("Cannot fit an empty window")
        t = f.grid
        weight = np.exp(complex(lam) * t) * (modulation(t) if modulation is not None else 1.0)
        basis = np.column_stack([t ** a * weight for a in range(degree + 1)])
        scales = np.max(np.abs(basis), axis=0)
        scales[scales == 0] = 1.0
        solution, *_ = scipy.linalg.lstsq(basis / scales, f.values)
        coeffs = solution / scales
        norm = np.linalg.norm(f.values)
        misfit = np.linalg.norm(f.values - basis @ coeffs)
        residual = float(misfit / norm) if norm > 0 else float(misfit)
        return ExponentialPolynomialFit(complex(lam), coeffs, residual)

    @staticmethod
    def relative_sup(output: SampledFunction, reference: SampledFunction) -> float:
        """sup|output| / sup|reference|."""
        scale = float(np.max(np.abs(reference.values)))
        value = float(np.max(np.abs(output.values)))
        return value / scale if scale > 0 else value

    def is_annihilated(self, output: SampledFunction, reference: SampledFunction, tol: float | None = None) -> bool:
        return self.relative_sup(output, reference) <= (tol if tol is not None else self.config.zero_tol)
