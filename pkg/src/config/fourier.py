from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    base_depth: int = Field(48, alias="FOURIER_BASE_DEPTH")
    max_depth: int = Field(128, alias="FOURIER_MAX_DEPTH")
    max_range: int = Field(512, alias="FOURIER_MAX_RANGE")
    normalization_tol: float = Field(1e-10, alias="NORMALIZATION_TOL")

    rel_tol: float = Field(1e-9, alias="DECAY_REL_TOL", description="zero threshold relative to the largest entry")
    zero_floor: float = Field(1e-12, alias="DECAY_ZERO_FLOOR", description="absolute round-off floor")
    min_points: int = Field(8, alias="DECAY_MIN_POINTS")
    max_residual: float = Field(0.5, alias="DECAY_MAX_RESIDUAL", description="max rms residual of the log fit")
    delta: float = Field(0.02, alias="DECAY_DELTA", description="q must stay below 1 - delta")
    support_gap: float = Field(1e3, alias="DECAY_SUPPORT_GAP")

    consistency_tol: float = Field(1e-8, alias="POISSON_CONSISTENCY_TOL")
    overflow_guard: float = Field(1e6, alias="OVERFLOW_GUARD")


settings = Settings()
