"""
Configuration management for starcover.

Settings are loaded from (in order of precedence):
  1. Environment variables, prefixed ``STARCOVER_``
  2. The ``.env`` file in the working directory
  3. The defaults declared below

Every key documented in ``.env.example`` has a typed field here, and unknown
keys are ignored rather than rejected, so an ``.env`` that is ahead of (or
behind) the code never prevents the tools from starting.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from . import __version__

#: Largest absolute coordinate the exact kernel accepts. Determinants of
#: differences then stay below 2**63 even though Python would not overflow.
COORDINATE_LIMIT = 2**30


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_prefix="STARCOVER_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        # Ignore unknown keys instead of raising: an ``.env`` copied from
        # ``.env.example`` must never break startup.
        extra="ignore",
    )

    # ------------------------------------------------------------------
    # Application
    # ------------------------------------------------------------------
    app_name: str = "starcover"
    app_version: str = __version__

    # ------------------------------------------------------------------
    # Exact oracle budget
    # ------------------------------------------------------------------
    #: Search nodes the backtracking oracle may expand per instance.
    budget_nodes: int = 100_000_000
    #: Wall-clock seconds per instance. ``STARCOVER_BUDGET_SECS`` overrides it.
    budget_secs: float = 60.0

    # ------------------------------------------------------------------
    # Geometry and generators
    # ------------------------------------------------------------------
    coordinate_limit: int = COORDINATE_LIMIT
    #: Radius of the circle the convex and lower-bound families are placed on.
    generator_radius: int = 1_000_000
    max_generator_retries: int = 50

    # ------------------------------------------------------------------
    # Partition engine
    # ------------------------------------------------------------------
    #: Random apex candidates tried after the deterministic 3-cut search.
    cut_apex_random_trials: int = 2000
    #: Above this many point triples the apex search samples centroids.
    cut_apex_triple_limit: int = 20_000
    cut_seed: int = 0

    # ------------------------------------------------------------------
    # Coverings
    # ------------------------------------------------------------------
    #: Largest convex set the auto strategy sends to the interval program.
    convex_dp_max_points: int = 24

    # ------------------------------------------------------------------
    # SVG rendering
    # ------------------------------------------------------------------
    svg_size: int = 1000
    svg_margin: int = 40
    svg_point_radius: float = 6.0

    # ------------------------------------------------------------------
    # Bench
    # ------------------------------------------------------------------
    #: Process pool size for bench instances; 1 runs them serially.
    bench_workers: int = 1

    # ------------------------------------------------------------------
    # Logging
    # ------------------------------------------------------------------
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # ------------------------------------------------------------------
    # Validators
    # ------------------------------------------------------------------
    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_log_level(cls, value: Any) -> Any:
        """``debug`` and ``DEBUG  # verbose`` both mean ``DEBUG``."""
        if isinstance(value, str):
            return value.split("#")[0].strip().upper()
        return value

    @field_validator(
        "budget_nodes",
        "budget_secs",
        "generator_radius",
        "max_generator_retries",
        "cut_apex_triple_limit",
        "convex_dp_max_points",
        "svg_size",
        "svg_point_radius",
        "bench_workers",
    )
    @classmethod
    def _positive(cls, value: float, info: Any) -> float:
        if value <= 0:
            raise ValueError(f"{info.field_name} must be greater than 0")
        return value

    @field_validator("cut_apex_random_trials", "svg_margin")
    @classmethod
    def _non_negative(cls, value: int, info: Any) -> int:
        if value < 0:
            raise ValueError(f"{info.field_name} must not be negative")
        return value

    @field_validator("coordinate_limit")
    @classmethod
    def _within_kernel_range(cls, value: int) -> int:
        if not 0 < value <= COORDINATE_LIMIT:
            raise ValueError(f"coordinate_limit must be in (0, {COORDINATE_LIMIT}]")
        return value

    @field_validator("generator_radius")
    @classmethod
    def _radius_fits(cls, value: int) -> int:
        if value * 4 > COORDINATE_LIMIT:
            raise ValueError("generator_radius leaves no room inside the coordinate range")
        return value


# Global settings instance
settings = Settings()
