import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.subdivision.dto import ScheduleDTO
from src.subdivision.entity import ExponentialTail, Mask, MaskSchedule, RepeatLast, SampledFunction
from src.subdivision.exceptions import EmptyWindowError, InvalidMaskError, LevelRangeError
from src.subdivision.service import SubdivisionService

HAT = Mask.from_coeffs([0.5, 1.0, 0.5], lo=-1)

data = st.lists(st.floats(min_value=-100, max_value=100, allow_nan=False), min_size=1, max_size=12)


def hat(t):
    return np.maximum(0.0, 1.0 - np.abs(t))


class TestMask:
    def test_requires_sum_two(self):
        with pytest.raises(InvalidMaskError):
            Mask.from_coeffs([0.5, 0.5])

    def test_requires_real_coefficients(self):
        with pytest.raises(InvalidMaskError):
            Mask.from_coeffs([1 + 0.5j, 1 - 0.5j])

    def test_schedule_requires_head(self):
        with pytest.raises(InvalidMaskError):
            MaskSchedule(())

    def test_stationary(self):
        schedule = MaskSchedule.stationary(HAT)
        assert schedule.is_stationary
        assert isinstance(schedule.tail, RepeatLast)


class TestSubdivideStep:
    def test_delta_gives_mask(self):
        result = SubdivisionService.subdivide_step(HAT, SampledFunction.delta())
        assert result.level == 1
        assert result.lo == -1
        np.testing.assert_allclose(result.values, [0.5, 1, 0.5])

    def test_twice_samples_hat(self):
        once = SubdivisionService.subdivide_step(HAT, SampledFunction.delta())
        twice = SubdivisionService.subdivide_step(HAT, once)
        assert twice.level == 2
        assert twice.lo == -3
        np.testing.assert_allclose(twice.values, [0.25, 0.5, 0.75, 1, 0.75, 0.5, 0.25])

    def test_zero_data_stays_zero(self):
        result = SubdivisionService.subdivide_step(HAT, SampledFunction(0, 0, np.zeros(5)))
        assert not np.any(result.values)

    def test_empty_window(self):
        with pytest.raises(EmptyWindowError):
            SubdivisionService.subdivide_step(HAT, SampledFunction(0, 0, np.zeros(0)))

    @given(data, data, st.floats(min_value=-10, max_value=10))
    def test_linear(self, first, second, alpha):
        size = min(len(first), len(second))
        f = SampledFunction(0, 0, first[:size])
        g = SampledFunction(0, 0, second[:size])
        combined = SampledFunction(0, 0, alpha * f.values + g.values)
        expected = alpha * SubdivisionService.subdivide_step(HAT, f).values + SubdivisionService.subdivide_step(HAT, g).values
        np.testing.assert_allclose(SubdivisionService.subdivide_step(HAT, combined).values, expected, atol=1e-9)


class TestRun:
    def test_hat_is_exact_on_dyadic_points(self, subdivision_service, hat_schedule):
        samples = subdivision_service.run(hat_schedule, SampledFunction.delta(), 10)
        assert samples.level == 10
        assert np.max(np.abs(samples.values - hat(samples.grid))) <= 1e-12

    def test_single_level_is_one_step(self, subdivision_service, hat_schedule):
        start = SampledFunction(0, -2, [1.0, 3.0, -1.0, 2.0])
        run = subdivision_service.run(hat_schedule, start, 1)
        step = subdivision_service.subdivide_step(HAT, start)
        assert run.lo == step.lo
        np.testing.assert_array_equal(run.values, step.values)

    def test_level_range(self, subdivision_service, hat_schedule):
        with pytest.raises(LevelRangeError):
            subdivision_service.run(hat_schedule, SampledFunction.delta(), 0)
        with pytest.raises(LevelRangeError):
            subdivision_service.run(hat_schedule, SampledFunction.delta(), 25)
        with pytest.raises(LevelRangeError):
            subdivision_service.run(hat_schedule, SampledFunction.delta(level=1), 2)

    @pytest.mark.parametrize("r", [3, 6, 9])
    def test_hat_levels_agree_on_common_points(self, subdivision_service, hat_schedule, r):
        coarse = subdivision_service.run(hat_schedule, SampledFunction.delta(), r)
        fine = subdivision_service.run(hat_schedule, SampledFunction.delta(), r + 1)
        # fine samples at even indices sit on the coarse grid
        start = coarse.lo * 2 - fine.lo
        np.testing.assert_allclose(fine.values[start::2][:coarse.size], coarse.values, rtol=0, atol=1e-12)

    def test_random_schedules_stay_inside_support_bound(self, subdivision_service):
        rng = np.random.default_rng(17)
        for _ in range(25):
            head = []
            for _ in range(int(rng.integers(1, 4))):
                coeffs = rng.uniform(-0.5, 1.5, int(rng.integers(1, 6)))
                coeffs = coeffs + (2 - coeffs.sum()) / coeffs.size
                head.append(Mask.from_coeffs(coeffs, lo=int(rng.integers(-3, 3))))
            schedule = MaskSchedule(tuple(head))
            lo, hi = subdivision_service.support_bound(schedule)
            samples = subdivision_service.run(schedule, SampledFunction.delta(), 6)
            outside = (samples.grid < lo - 1e-12) | (samples.grid > hi + 1e-12)
            assert np.all(np.abs(samples.values[outside]) <= 1e-12)
            limit = subdivision_service.basic_limit(schedule, 6)
            assert limit.window[0] >= lo - 1e-12
            assert limit.window[1] <= hi + 1e-12

    def test_head_then_repeat(self, subdivision_service):
        haar = Mask.from_coeffs([1.0, 1.0], level=1)
        schedule = MaskSchedule((haar, HAT))
        assert subdivision_service.mask_at(schedule, 1) is haar
        assert subdivision_service.mask_at(schedule, 5) is HAT
        with pytest.raises(LevelRangeError):
            subdivision_service.mask_at(schedule, 0)


class TestBasicLimit:
    def test_hat_values(self, subdivision_service, hat_schedule):
        phi = subdivision_service.basic_limit(hat_schedule, 3)
        assert phi.value_at(0.5) == pytest.approx(0.5)
        assert phi.value_at(0) == pytest.approx(1)
        assert phi.window == (-1 + 2.0 ** -3, 1 - 2.0 ** -3)

    def test_degenerate_mask_keeps_unit_mass(self, subdivision_service):
        phi = subdivision_service.basic_limit(MaskSchedule.stationary(Mask.from_coeffs([2.0])), 4)
        assert phi.size == 1
        assert phi.value_at(0) == pytest.approx(2 ** 4)

    def test_exponential_b_spline(self, subdivision_service, exp_schedule):
        r = 8
        phi = subdivision_service.basic_limit(exp_schedule, r)
        h = 2.0 ** -r
        expected = 2 ** r * math.expm1(h) * np.exp(phi.grid) / (math.e - 1)
        assert phi.window == (0, 1 - h)
        np.testing.assert_allclose(phi.values, expected, rtol=1e-12)

    def test_refine_limit_removes_cascade_offset(self, subdivision_service, exp_schedule):
        # φ jumps to zero at t = 1
        phi = subdivision_service.refine_limit(exp_schedule, 8).restrict(0, 1 - 2.0 ** -8)
        exact = np.exp(phi.grid) / (math.e - 1)
        assert np.max(np.abs(phi.values - exact)) <= 1e-8

    def test_refine_limit_without_steps_is_cascade(self, subdivision_service, hat_schedule):
        plain = subdivision_service.refine_limit(hat_schedule, 5, steps=0)
        cascade = subdivision_service.basic_limit(hat_schedule, 5)
        assert plain.window == (-1, 1)
        assert plain.value_at(-1) == plain.value_at(1) == 0
        np.testing.assert_array_equal(plain.restrict(*cascade.window).values, cascade.values)

    def test_refine_limit_covers_support(self, subdivision_service, bspline_schedule):
        phi = subdivision_service.refine_limit(bspline_schedule, 10)
        assert phi.window == (0, 3)
        t = phi.grid
        exact = np.where(t < 1, t ** 2 / 2, np.where(t < 2, (-2 * t ** 2 + 6 * t - 3) / 2, (3 - t) ** 2 / 2))
        assert np.max(np.abs(phi.values - exact)) <= 1e-12
        assert phi.value_at(3 - 2.0 ** -9) == pytest.approx(2.0 ** -19, rel=1e-6)

    def test_refine_limit_level_budget(self, subdivision_service, hat_schedule):
        with pytest.raises(LevelRangeError):
            subdivision_service.refine_limit(hat_schedule, 23, steps=2)


class TestSupport:
    def test_stationary_hat(self, subdivision_service, hat_schedule):
        assert subdivision_service.support_bound(hat_schedule) == (-1, 1)

    def test_stationary_cubic_symbol(self, subdivision_service, bspline_schedule):
        assert subdivision_service.support_bound(bspline_schedule) == (0, 3)

    def test_head_then_stationary(self, subdivision_service):
        schedule = MaskSchedule((Mask.from_coeffs([1.0, 1.0]), HAT))
        lo, hi = subdivision_service.support_bound(schedule)
        assert lo == pytest.approx(-0.5)
        assert hi == pytest.approx(1)

    def test_exponential_tail(self, subdivision_service, exp_schedule):
        assert subdivision_service.support_bound(exp_schedule) == (0, 1)
        assert isinstance(exp_schedule.tail, ExponentialTail)

    @pytest.mark.parametrize("supports, expected", [
        ([(-1, 1)], 2),
        ([], 0),
        ([(0, 3), (-1, 1)], 5),
        ([(-0.5, 1)], 2),
    ])
    def test_dimension_bound(self, supports, expected):
        assert SubdivisionService.dimension_bound(supports) == expected

    def test_shift_range(self):
        assert list(SubdivisionService.shift_range((-1, 1), (0, 2))) == [-1, 0, 1, 2, 3]


class TestShiftSums:
    @pytest.mark.parametrize("schedule_name", ["hat_schedule", "bspline_schedule"])
    def test_partition_of_unity(self, subdivision_service, schedule_name, request):
        schedule = request.getfixturevalue(schedule_name)
        total = subdivision_service.partition_of_unity(schedule, 8, (0, 4))
        assert np.max(np.abs(total.values - 1)) <= 1e-10

    def test_integer_shift_sum_with_weights(self, subdivision_service, hat_schedule):
        phi = subdivision_service.basic_limit(hat_schedule, 6)
        shifts = subdivision_service.shift_range((-1, 1), (-2, 2))
        linear = subdivision_service.integer_shift_sum(phi, {shift: float(shift) for shift in shifts}, (-2, 2))
        np.testing.assert_allclose(linear.values, linear.grid, atol=1e-12)

    def test_empty_window(self, subdivision_service, hat_schedule):
        phi = subdivision_service.basic_limit(hat_schedule, 2)
        with pytest.raises(EmptyWindowError):
            subdivision_service.integer_shift_sum(phi, {0: 1.0}, (0.1, 0.2))

    def test_sample_function(self):
        samples = SubdivisionService.sample_function(np.sin, (0, 1), 3)
        assert samples.size == 9
        np.testing.assert_allclose(samples.values, np.sin(np.arange(9) / 8))


class TestSampledFunction:
    def test_restrict(self):
        samples = SampledFunction(2, -4, np.arange(9))
        inner = samples.restrict(-0.5, 0.5)
        assert inner.lo == -2
        np.testing.assert_array_equal(inner.values, [2, 3, 4, 5, 6])
        assert samples.restrict(5, 6).size == 0

    def test_value_at_off_grid(self):
        with pytest.raises(ValueError):
            SampledFunction(1, 0, [1.0, 2.0]).value_at(0.3)

    def test_frame_columns(self):
        frame = SampledFunction(1, -1, [1j, 2, 3]).to_frame()
        assert list(frame.columns) == ["t", "re", "im"]
        np.testing.assert_allclose(frame["t"], [-0.5, 0, 0.5])


class TestScheduleDTO:
    def test_stationary_json(self):
        dto = ScheduleDTO.model_validate({"head": [{"lo": -1, "coeffs": [0.5, 1, 0.5]}]})
        schedule = dto.to_entity()
        assert schedule.is_stationary
        np.testing.assert_allclose(schedule.head[0].coeffs, [0.5, 1, 0.5])

    def test_exponential_tail_json(self, exp_schedule):
        dto = ScheduleDTO.from_entity(exp_schedule)
        assert dto.tail.kind == "exponential"
        restored = dto.to_entity()
        assert restored.tail.space.spectrum == ((1 + 0j, 0),)
        np.testing.assert_allclose(restored.head[0].coeffs, exp_schedule.head[0].coeffs)
