"""Application configuration management."""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from shared.constants import DEFAULT_MAX_DEGREE


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SCHUBERT_CONE_",
        case_sensitive=False,
        extra="ignore",
    )

    app_name: str = "schubert-cone"
    app_env: Literal["development", "test", "production"] = "development"
    debug: bool = False
    log_level: str = "WARNING"

    # -------------------------------------------------------------------------
    # Enumeration limits
    # -------------------------------------------------------------------------
    node_budget: int | None = Field(default=None, ge=1)
    default_max_degree: int = Field(default=DEFAULT_MAX_DEGREE, ge=0)

    @field_validator("node_budget", mode="before")
    @classmethod
    def parse_node_budget(cls, v: str | int | None) -> int | None:
        if isinstance(v, str) and v.strip().lower() in ("", "none", "off", "0"):
            return None
        return v  # type: ignore[return-value]

    # -------------------------------------------------------------------------
    # Rendering
    # -------------------------------------------------------------------------
    output_dir: Path = Path("figures")
    svg_cell_size: int = Field(default=28, ge=8)
    svg_margin: int = Field(default=36, ge=0)

    # -------------------------------------------------------------------------
    # Sweeps
    # -------------------------------------------------------------------------
    sweep_max_n: int = Field(default=7, ge=1)
    sweep_max_degree: int = Field(default=4, ge=0)
    sweep_samples: int = Field(default=10_000, ge=1)
    sweep_seed: int = 20260101


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
