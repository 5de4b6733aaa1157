import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.difference.exceptions import WindowTooSmallError
from src.difference.service import DifferenceService
from src.subdivision.entity import SampledFunction

LEVEL = 4
LAMBDAS = [0, 0.7, -0.7, 0.3 + 2j, 0.3 - 2j]

lambdas = st.sampled_from(LAMBDAS)
weights = st.floats(min_value=-5, max_value=5)


def sample(f, lo=-4.0, hi=4.0, level=LEVEL) -> SampledFunction:
    return SampledFunction.from_callable(f, lo, hi, level)


def random_trigonometric(rng):
    """2 + Σ_{m≤3} a_m cos(2πmt) + b_m sin(2πmt) with |Σ| ≤ 1, so 1 ≤ |π| ≤ 3."""
    a, b = rng.uniform(-1 / 6, 1 / 6, size=(2, 3))

    def periodic(t):
        t = np.asarray(t, dtype=float)
        m = np.arange(1, 4)[:, None]
        return 2 + a @ np.cos(2 * np.pi * m * t) + b @ np.sin(2 * np.pi * m * t)

    return periodic


class TestNabla:
    def test_line_gives_constant(self, difference_service):
        result = difference_service.nabla(0, sample(lambda t: t))
        assert result.window == (-4, 3)
        np.testing.assert_allclose(result.values, 1, atol=1e-12)

    def test_kills_exponential(self, difference_service):
        f = sample(lambda t: np.exp(0.7 * t))
        assert difference_service.is_annihilated(difference_service.nabla(0.7, f), f)

    def test_square(self, difference_service):
        result = difference_service.nabla(0, sample(lambda t: t ** 2))
        np.testing.assert_allclose(result.values, 2 * result.grid + 1, atol=1e-12)

    def test_window_too_small(self, difference_service):
        with pytest.raises(WindowTooSmallError):
            difference_service.nabla(0, sample(lambda t: t, 0, 0.9375))
        with pytest.raises(WindowTooSmallError):
            difference_service.nabla_power(0, 3, sample(lambda t: t, 0, 2.5))

    @given(lambdas, weights, weights)
    def test_linear(self, lam, alpha, beta):
        f = sample(np.sin)
        g = sample(lambda t: t ** 3)
        combined = f.with_values(alpha * f.values + beta * g.values)
        expected = alpha * DifferenceService.nabla(lam, f).values + beta * DifferenceService.nabla(lam, g).values
        np.testing.assert_allclose(DifferenceService.nabla(lam, combined).values, expected, atol=1e-12 * 400)

    @given(lambdas, lambdas)
    def test_commutes(self, lam, mu):
        f = sample(lambda t: np.cos(3 * t) * np.exp(0.2 * t) + t ** 2)
        first = DifferenceService.nabla(lam, DifferenceService.nabla(mu, f))
        second = DifferenceService.nabla(mu, DifferenceService.nabla(lam, f))
        np.testing.assert_allclose(first.values, second.values, atol=1e-12 * 100)


class TestNablaPower:
    def test_annihilates_modulated_quadratic(self, difference_service):
        f = sample(lambda t: (np.sin(2 * np.pi * t) + 2) * (t ** 2 + 1) * np.exp(0.3 * t))
        assert difference_service.relative_sup(difference_service.nabla_power(0.3, 3, f), f) <= 1e-9
        assert difference_service.relative_sup(difference_service.nabla_power(0.3, 2, f), f) > 1e-3

    def test_other_exponent_keeps_degree(self, difference_service):
        lam, mu = 0.3, -0.5

        def periodic(t):
            return np.cos(2 * np.pi * t) + 2

        f = sample(lambda t: periodic(t) * t * np.exp(mu * t))
        result = difference_service.nabla(lam, f)
        fit = DifferenceService.fit_exponential_polynomial(result, mu, 1, periodic)
        assert fit.residual <= 1e-8
        assert fit.degree == 1
        np.testing.assert_allclose(fit.coeffs, [np.exp(mu - lam), np.exp(mu - lam) - 1], atol=1e-8)

    def test_annihilation_order_is_exact(self, difference_service):
        rng = np.random.default_rng(7)
        passed = 0
        for trial in range(100):
            lam = LAMBDAS[trial % len(LAMBDAS)]
            degree = int(rng.integers(0, 5))
            periodic = random_trigonometric(rng)
            # monic, so the surviving constant degree! stays visible
            coeffs = np.append(rng.uniform(-1, 1, size=degree), 1.0)
            f = sample(lambda t: periodic(t) * np.polynomial.polynomial.polyval(t, coeffs) * np.exp(lam * t), -3, 3)

            killed = difference_service.nabla_power(lam, degree + 1, f)
            ok = difference_service.relative_sup(killed, f) <= 1e-9
            if degree > 0:
                survivor = difference_service.nabla_power(lam, degree, f)
                ok = ok and difference_service.relative_sup(survivor, f) > 1e-3
            passed += ok
        assert passed == 100


class TestEliminate:
    def test_keeps_exponential(self, difference_service):
        f = sample(lambda t: 1 + np.exp(t))
        result = difference_service.eliminate(f, [(0, 0), (1, 0)], keep=1)
        fit = DifferenceService.fit_exponential_polynomial(result, 1, 0)
        assert fit.residual <= 1e-9
        assert fit.coeffs[0] == pytest.approx(np.e - 1)

    def test_single_component_untouched(self, difference_service):
        f = sample(np.exp)
        result = difference_service.eliminate(f, [(1, 0)], keep=0)
        np.testing.assert_array_equal(result.values, f.values)

    def test_modulated_component_removed(self, difference_service):
        f = sample(lambda t: 1 + t * np.exp(t) * np.sin(np.pi * t) ** 2)
        result = difference_service.eliminate(f, [(0, 0), (1, 1)], keep=0)
        assert np.std(result.values) <= 1e-8
        assert result.values[0] == pytest.approx((np.exp(-1) - 1) ** 2)

    def test_bad_index(self, difference_service):
        with pytest.raises(IndexError):
            difference_service.eliminate(sample(np.exp), [(1, 0)], keep=1)

    def test_window_exhausted(self, difference_service):
        with pytest.raises(WindowTooSmallError):
            difference_service.eliminate(sample(np.exp, 0, 1.5), [(0, 1), (1, 0)], keep=1)
