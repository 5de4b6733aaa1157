from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    zero_tol: float = Field(1e-10, alias="ZERO_CONDITION_TOL")
    generation_tol: float = Field(1e-5, alias="GENERATION_TOL")
    level_offset: int = Field(0, alias="ZERO_LEVEL_OFFSET", description="zeros sit at -exp(-lambda 2^-(j + offset))")
    max_zero_levels: int = Field(64, alias="ZERO_CONDITION_MAX_LEVELS")


settings = Settings()
