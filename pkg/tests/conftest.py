import os

import pytest
from hypothesis import settings

from src.container import Container
from src.generation.entity import ExponentialSpace
from src.subdivision.entity import Mask, MaskSchedule

settings.register_profile("ci", max_examples=40, deadline=None, derandomize=True)
settings.register_profile("dev", max_examples=10, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "ci"))


@pytest.fixture(scope="session")
def container() -> Container:
    return Container()


@pytest.fixture(scope="session")
def symbol_service(container):
    return container.symbol_service


@pytest.fixture(scope="session")
def subdivision_service(container):
    return container.subdivision_service


@pytest.fixture(scope="session")
def fourier_service(container):
    return container.fourier_service


@pytest.fixture(scope="session")
def difference_service(container):
    return container.difference_service


@pytest.fixture(scope="session")
def shift_service(container):
    return container.shift_service


@pytest.fixture(scope="session")
def generation_service(container):
    return container.generation_service


@pytest.fixture(scope="session")
def hat_mask() -> Mask:
    return Mask.from_coeffs([0.5, 1.0, 0.5], lo=-1)


@pytest.fixture(scope="session")
def hat_schedule(hat_mask) -> MaskSchedule:
    return MaskSchedule.stationary(hat_mask)


@pytest.fixture(scope="session")
def bspline_schedule() -> MaskSchedule:
    """Quadratic B-spline, (1 + z)^3 / 4."""
    return MaskSchedule.stationary(Mask.from_coeffs([0.25, 0.75, 0.75, 0.25], lo=0))


@pytest.fixture(scope="session")
def exp_space() -> ExponentialSpace:
    return ExponentialSpace(((1.0, 0),))


@pytest.fixture(scope="session")
def exp_schedule(generation_service, exp_space) -> MaskSchedule:
    return generation_service.construct_schedule(exp_space)
