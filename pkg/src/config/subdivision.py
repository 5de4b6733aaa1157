from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    mask_sum_tol: float = Field(1e-10, alias="MASK_SUM_TOL")
    mask_real_tol: float = Field(1e-14, alias="MASK_REAL_TOL")
    max_levels: int = Field(24, alias="MAX_LEVELS")


settings = Settings()
