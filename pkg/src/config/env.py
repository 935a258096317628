#!/usr/bin/env python3
"""
Environment configuration using pydantic BaseSettings.
"""

from typing import Any, Dict

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings from environment variables."""

    # Output
    MULTIBASE_DIGITS: int = Field(10, description="Default decimal digits printed for algebraic numbers")

    # Logging
    MULTIBASE_LOG_LEVEL: str = Field("WARNING", description="Logging level")
    MULTIBASE_DEBUG: bool = Field(False, description="Human-readable console logs instead of JSON lines")

    # Search limits
    MULTIBASE_ALPHA_HORIZON: int = Field(64, description="Orbit steps for the quasi-greedy expansion of 1")
    MULTIBASE_DEPTH_CAP: int = Field(128, description="Depth cap of the expansion tree search")
    MULTIBASE_BRANCH_CAP: int = Field(64, description="Branch cap of the expansion tree search")
    MULTIBASE_SWEEP_K: int = Field(8, description="Largest k and j swept by the B2 window enumeration")

    # Caches
    MULTIBASE_CACHE_SIZE: int = Field(4096, description="Capacity of the base and family-root caches")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    @field_validator("MULTIBASE_LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v):
        """Validate log level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"MULTIBASE_LOG_LEVEL must be one of {valid_levels}")
        return v.upper()

    @field_validator(
        "MULTIBASE_DIGITS",
        "MULTIBASE_ALPHA_HORIZON",
        "MULTIBASE_DEPTH_CAP",
        "MULTIBASE_BRANCH_CAP",
        "MULTIBASE_CACHE_SIZE",
    )
    @classmethod
    def validate_positive(cls, v):
        """Limits and precisions must be positive."""
        if v < 1:
            raise ValueError("value must be a positive integer")
        return v

    @field_validator("MULTIBASE_SWEEP_K")
    @classmethod
    def validate_sweep_k(cls, v):
        """The sweep needs k, j up to at least 4 to reach every window root."""
        if v < 4:
            raise ValueError("MULTIBASE_SWEEP_K must be at least 4")
        return v

    def describe(self) -> Dict[str, Any]:
        """Get effective configuration for logging."""
        return self.model_dump()


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get application settings."""
    return settings
