from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    trim_tol: float = Field(1e-14, alias="SYMBOL_TRIM_TOL", description="relative modulus below which coefficients are dropped")
    sup_grid: int = Field(4096, alias="SYMBOL_SUP_GRID", description="uniform grid size for sup-norm estimates on [0,1)")


settings = Settings()
