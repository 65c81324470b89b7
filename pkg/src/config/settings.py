"""
Application settings and configuration management.

Uses pydantic-settings for environment variable loading.
"""

from functools import lru_cache

from pydantic import Field, computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ROUNDSIM_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "roundsim"
    app_version: str = "0.1.0"
    debug: bool = False
    log_level: str = "INFO"

    # Existential search
    max_k: int = Field(default=16, ge=1)
    quotient_cap: int = Field(default=1_000_000, ge=1)  # Parikh pairs per round length
    verify_reuse: bool = False  # re-run containment whenever a profile answer is reused

    # Containment
    antichain: bool = True

    # Powerset alphabets
    max_processes: int = Field(default=6, ge=1)
    max_prime_count: int = Field(default=4, ge=1)

    # Oracles
    oracle_max_rounds: int = Field(default=2, ge=1)
    oracle_max_word_length: int = Field(default=12, ge=1)
    oracle_max_enumerations: int = Field(default=200_000, ge=1)
    universality_cutoff: int = Field(default=4096, ge=1)

    @computed_field
    @property
    def effective_log_level(self) -> str:
        """Log level after applying the debug switch."""
        return "DEBUG" if self.debug else self.log_level.upper()


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
