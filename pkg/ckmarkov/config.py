from __future__ import annotations

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    log_level: str = "INFO"

    # Brute-force pointed-isomorphism search (and automorphism orbits) only
    # runs on finite groups up to this order.
    max_group_order: int = Field(default=10_000, gt=0)
    # Search-tree nodes the automorphism enumerator may visit before giving up
    max_automorphism_nodes: int = Field(default=500_000, gt=0)

    # Truncation order for zeta series checks
    zeta_order: int = Field(default=8, gt=0)

    # Randomized validation battery (scripts/validate_examples.py)
    random_seed: int = 0
    sample_size: int = Field(default=200, gt=0)
    max_sample_n: int = Field(default=7, gt=0)

    @field_validator("log_level", mode="before")
    @classmethod
    def normalise_level(cls, v: str) -> str:
        return str(v).strip().upper()


settings = Settings()
