"""Application configuration using pydantic-settings."""

from typing import Literal

import sympy
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Residue products must fit a signed 64-bit integer.
MIN_PRIME = 2**14
MAX_PRIME = 2**31


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ENVELOPE_LAB_",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "envelope-lab"
    debug: bool = False

    # Field
    prime: int = Field(default=32003, description="Modulus of the coefficient field F_p")

    # Randomness
    seed: int = Field(default=0, ge=0, lt=2**64, description="Base seed for all random draws")

    # Experiment settings
    trials: int = Field(default=50, ge=1, description="Monte-Carlo trials per item")
    pass_rate_threshold: float = Field(
        default=0.95,
        ge=0.0,
        le=1.0,
        description="Minimum pass rate for Monte-Carlo commands",
    )
    max_workers: int = Field(default=4, ge=1, le=64)

    # Graded linear algebra
    max_degree_cap: int | None = Field(
        default=None,
        description="Window cap; defaults to sum(b) + 4 when resolution data is known",
    )
    fallback_degree_cap: int = Field(default=20, ge=4)
    stabilization_window: int = Field(default=3, ge=2, description="Equal differences needed")
    reducedness_retries: int = Field(default=5, ge=1)

    # Output
    output_format: Literal["json", "csv", "text"] = Field(default="json")

    @field_validator("prime")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        """Reject composite moduli and moduli outside the supported range."""
        if not MIN_PRIME <= value < MAX_PRIME:
            raise ValueError(f"prime must lie in [{MIN_PRIME}, {MAX_PRIME}), got {value}")
        if not sympy.isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

    def degree_cap(self, syzygy_degree_sum: int | None = None) -> int:
        """Get the Hilbert-window cap for an ideal with the given sum of b_j."""
        if self.max_degree_cap is not None:
            return self.max_degree_cap
        if syzygy_degree_sum is not None:
            return syzygy_degree_sum + 4
        return self.fallback_degree_cap


settings = Settings()
