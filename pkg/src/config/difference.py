from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    zero_tol: float = Field(1e-9, alias="DIFFERENCE_ZERO_TOL")


settings = Settings()
