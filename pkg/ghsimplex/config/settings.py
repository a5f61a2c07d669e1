"""Configuration settings for ghsimplex."""

from typing import Any

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class GHSimplexSettings(BaseSettings):
    """Library and command line configuration settings."""

    model_config = SettingsConfigDict(
        env_prefix="GHSIMPLEX_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log: str = Field(default="info", description="Log level: error, info or debug")

    # Reproducibility
    seed: int = Field(default=0, description="Seed for every randomized routine")

    # Numerics
    validation_rtol: float = Field(
        default=1e-9,
        description="Triangle tolerance factor; tau = rtol * (1 + diam X)",
    )
    profile_tolerance: float = Field(
        default=1e-12, description="Tolerance for profile comparisons"
    )

    # Oracle and output sizes
    bruteforce_cell_limit: int = Field(
        default=20, description="Maximum m*n cells for the correspondence oracle"
    )
    profile_samples: int = Field(
        default=257, description="Uniform samples stored with each profile"
    )
    verify_grid: int = Field(
        default=64, description="Evenly spaced lambda values used by verify"
    )

    @field_validator("log")
    @classmethod
    def validate_log(cls, v: str) -> str:
        """Validate log level."""
        valid_levels = {"error", "info", "debug"}
        if v.lower() not in valid_levels:
            raise ValueError(f"Invalid log level: {v}. Must be one of {valid_levels}")
        return v.lower()

    @field_validator("validation_rtol", "profile_tolerance")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Validate tolerances."""
        if v < 0:
            raise ValueError("Tolerance must be non-negative")
        return v

    @field_validator("bruteforce_cell_limit")
    @classmethod
    def validate_cell_limit(cls, v: int) -> int:
        """Validate the oracle guard."""
        if v < 1 or v > 24:
            raise ValueError("Brute-force cell limit must be between 1 and 24")
        return v

    @field_validator("profile_samples", "verify_grid")
    @classmethod
    def validate_sample_count(cls, v: int) -> int:
        """Validate sample counts."""
        if v < 2:
            raise ValueError("Sample counts must be at least 2")
        return v

    def log_level_name(self) -> str:
        """Get the stdlib logging level name for the configured level."""
        return self.log.upper()

    def get_safe_dict(self) -> dict[str, Any]:
        """Get configuration as a plain dictionary for logging."""
        return self.model_dump(mode="json")


# Global settings instance
_settings: GHSimplexSettings | None = None


def get_settings() -> GHSimplexSettings:
    """Get global settings instance."""
    global _settings
    if _settings is None:
        _settings = GHSimplexSettings()
    return _settings


def reload_settings() -> GHSimplexSettings:
    """Reload settings from environment variables."""
    global _settings
    _settings = GHSimplexSettings()
    return _settings


def update_settings(**kwargs: Any) -> GHSimplexSettings:
    """Update settings with new values."""
    global _settings
    current_data = _settings.model_dump() if _settings else {}
    current_data.update(kwargs)
    _settings = GHSimplexSettings(**current_data)
    return _settings
