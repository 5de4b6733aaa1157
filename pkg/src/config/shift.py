from pydantic import Field
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    rank_tol: float = Field(1e-10, alias="RANK_TOL")


settings = Settings()
