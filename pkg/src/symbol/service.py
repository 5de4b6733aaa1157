import logging
import math
from typing import Sequence

import numpy as np

from src.config.symbol import Settings, settings as default_settings
from src.symbol.dto import LagrangeBoundDTO
from src.symbol.entity import LaurentPolynomial, NormalizationConvention, convention_factor
from src.symbol.exceptions import CoincidentPointsError, DegreeWindowError, ZeroArgumentError

logger = logging.getLogger(__name__)


def falling_factorial(m: np.ndarray, order: int) -> np.ndarray:
    out = np.ones_like(m, dtype=float)
    for i in range(order):
        out = out * (m - i)
    return out


class SymbolService:
    """
    **Description**: Algebra and evaluation of Laurent polynomials read both as subdivision
    symbols a^{[j]}(z) and as trigonometric polynomials a_j(y) with z = e^{-2πiy}.

    **Methods**:
    - `eval_z`, `eval_trig`: point (or array) evaluation.
    - `derivative_trig`, `derivative_z`: coefficient maps of d/dy and d/dz.
    - `mul`, `add`, `scale`, `from_roots`, `to_convention`: algebra.
    - `sup_norm`: grid estimate of ‖a‖_∞ on [0, 1).
    - `lagrange_bound`: the interpolation estimate for trigonometric polynomials.

    **Usage**: Stateless apart from its settings; every method is a pure function of its inputs.
    """
    def __init__(self, config: Settings = default_settings):
        self.config = config

    @staticmethod
    def eval_z(p: LaurentPolynomial, z):
        """
        **Description**: Evaluates Σ_m coeffs·z^m by Horner's rule, times z^lo.

        **Input**:
        - `p`: *LaurentPolynomial*
        - `z`: *complex | np.ndarray* - evaluation point(s).

        **Exceptions**:
        - `ZeroArgumentError`: If z = 0 and p has negative exponents.
        """
        z_arr = np.asarray(z, dtype=complex)
        if p.is_zero:
            result = np.zeros_like(z_arr)
            return result if result.ndim else complex(result)

        if p.lo < 0 and np.any(z_arr == 0):
            raise ZeroArgumentError(f"Cannot evaluate a symbol with lowest exponent {p.lo} at z = 0")

        result = np.polyval(p.coeffs[::-1], z_arr)
        if p.lo:
            result = result * np.power(z_arr, p.lo)
        return result if np.ndim(result) else complex(result)

    def eval_trig(
            self,
            p: LaurentPolynomial,
            y,
            conv: NormalizationConvention = NormalizationConvention.FOURIER_UNIT,
            source: NormalizationConvention = NormalizationConvention.SUBDIVISION_SUM2,
    ):
        """
        **Description**: Evaluates the trigonometric polynomial a(y) = scale · p(e^{-2πiy}).

        `source` is the convention the coefficients are stored in (masks are stored sum-2)
        and `conv` the requested view; `scale` is 1/2 exactly when converting sum-2 to unit.
        Complex y is allowed, the exponential extends analytically.
        """
        factor = convention_factor(source, conv)
        return factor * self.eval_z(p, np.exp(-2j * np.pi * np.asarray(y, dtype=complex)))

    @staticmethod
    def derivative_trig(p: LaurentPolynomial, order: int) -> LaurentPolynomial:
        """Coefficients of d^order/dy^order a(y): coefficient m times (-2πim)^order."""
        if order < 0:
            raise ValueError("Derivative order must be non-negative")
        if order == 0:
            return p
        factors = (-2j * np.pi * p.exponents) ** order
        return LaurentPolynomial.from_coeffs(p.coeffs * factors, p.lo)

    @staticmethod
    def derivative_z(p: LaurentPolynomial, order: int) -> LaurentPolynomial:
        """Coefficients of D^order p(z); exponent m contributes m(m-1)...(m-order+1) z^{m-order}."""
        if order < 0:
            raise ValueError("Derivative order must be non-negative")
        if order == 0 or p.is_zero:
            return p
        return LaurentPolynomial.from_coeffs(p.coeffs * falling_factorial(p.exponents, order), p.lo - order)

    @staticmethod
    def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
        if p.is_zero or q.is_zero:
            return LaurentPolynomial.zero()
        return LaurentPolynomial.from_coeffs(np.convolve(p.coeffs, q.coeffs), p.lo + q.lo)

    @staticmethod
    def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
        lo = min(p.lo, q.lo)
        hi = max(p.hi, q.hi)
        return LaurentPolynomial.from_coeffs(p.dense(lo, hi) + q.dense(lo, hi), lo)

    @staticmethod
    def scale(p: LaurentPolynomial, c: complex) -> LaurentPolynomial:
        return LaurentPolynomial.from_coeffs(c * p.coeffs, p.lo)

    @staticmethod
    def from_roots(roots: Sequence[complex], leading: complex = 1.0, lo: int = 0) -> LaurentPolynomial:
        """leading · z^lo · Π_r (z - r)."""
        if len(roots) == 0:
            return LaurentPolynomial.monomial(lo, leading)
        # np.poly lists the highest power first
        coeffs = np.poly(np.asarray(roots, dtype=complex))[::-1]
        return LaurentPolynomial.from_coeffs(leading * coeffs, lo)

    @staticmethod
    def to_convention(
            p: LaurentPolynomial,
            source: NormalizationConvention,
            target: NormalizationConvention,
    ) -> LaurentPolynomial:
        return LaurentPolynomial.from_coeffs(convention_factor(source, target) * p.coeffs, p.lo)

    def sup_norm(self, p: LaurentPolynomial, grid: int | None = None) -> float:
        """Max of |p(e^{-2πiy})| over a uniform grid of `grid` points in [0, 1)."""
        grid = grid or self.config.sup_grid
        y = np.arange(grid) / grid
        return float(np.max(np.abs(self.eval_z(p, np.exp(-2j * np.pi * y)))))

    def lagrange_bound(self, p: LaurentPolynomial, points: Sequence[float]) -> LagrangeBoundDTO:
        """
        **Description**: Checks ‖a‖_∞ · (min_{m≠k} |y_m - y_k|)^N ≤ 2^{-N} (N+1) max_m |a(y_m)|
        for a(y) = Σ_{m=0}^N a_m e^{-2πimy} and N+1 pairwise distinct points in [0, 1).

        **Input**:
        - `p`: *LaurentPolynomial* - exponents within [0, N].
        - `points`: *Sequence[float]* - N+1 pairwise distinct points in [0, 1).

        **Output**:
        - *LagrangeBoundDTO*: `lhs` uses the grid estimate of ‖a‖_∞; since a grid maximum
          can only underestimate, `slack = πN/G / (1 - πN/G)` (Bernstein: ‖a'‖ ≤ 2πN‖a‖)
          bounds how far the true left side may exceed the reported one.

        **Exceptions**:
        - `CoincidentPointsError`: If two points coincide.
        - `DegreeWindowError`: If exponents leave [0, N] or points leave [0, 1).
        """
        y = np.asarray(points, dtype=float)
        n = y.size - 1
        if np.any(y < 0) or np.any(y >= 1):
            raise DegreeWindowError("Interpolation points must lie in [0, 1)")
        if not p.is_zero and (p.lo < 0 or p.hi > n):
            raise DegreeWindowError(f"Exponents [{p.lo}, {p.hi}] do not fit [0, {n}] for {n + 1} points")

        ordered = np.sort(y)
        gaps = np.diff(ordered)
        if gaps.size and np.min(gaps) <= 0:
            raise CoincidentPointsError(f"Interpolation points are not pairwise distinct: {points}")
        # distances are measured along the circle, so the wrap-around gap counts too
        min_gap = float(min(np.min(gaps), 1 - (ordered[-1] - ordered[0]))) if gaps.size else 1.0

        grid = self.config.sup_grid
        sup = self.sup_norm(p, grid)
        ratio = math.pi * n / grid
        slack = ratio / (1 - ratio) if ratio < 1 else math.inf

        lhs = sup * min_gap ** n
        values = np.abs(self.eval_z(p, np.exp(-2j * np.pi * y)))
        rhs = 2.0 ** (-n) * (n + 1) * float(np.max(values))
        holds = lhs <= rhs * (1 + slack)

        logger.debug(f"Lagrange bound N={n}: lhs={lhs:.3e} rhs={rhs:.3e} holds={holds}")
        return LagrangeBoundDTO(lhs=lhs, rhs=rhs, slack=slack, holds=holds)
