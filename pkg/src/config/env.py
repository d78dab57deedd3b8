"""Environment configuration using Pydantic Settings."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Defaults for the command line, from POLYMATROID_* variables or a .env file."""

    d_max: int = Field(3, ge=1, description="Truncation degree for fiber sweeps")
    fiber_cap: int = Field(1_000_000, ge=1, description="Largest fiber enumerated before giving up")
    step_cap: int = Field(1_000_000, ge=1, description="Buchberger S-pair reduction cap")
    single_column_degree: int = Field(3, ge=2, description="Max degree of single-column moves")

    rees_cap_x: int = Field(2, ge=1, description="Rees sweep cap on the x-degree")
    rees_cap_y: int = Field(3, ge=1, description="Rees sweep cap on the y-degree")
    hibi_variable_cap: int = Field(10_000, ge=1, description="Max variables for Hibi enumeration")

    jobs: int = Field(1, ge=1, description="Worker processes for corpus runs")
    seed: int = Field(1, ge=0, description="Default PRNG seed")
    log_level: str = Field("INFO", description="Root log level")
    order_search_limit: int = Field(24, ge=0, description="Extra rankings tried per order kind")

    model_config = SettingsConfigDict(
        env_prefix="POLYMATROID_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )


# Singleton
_settings: Settings | None = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Drop the cached settings so the next call re-reads the environment."""
    global _settings
    _settings = None
