"""Configuration helpers loaded from environment variables."""

from __future__ import annotations

import logging
from functools import lru_cache

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class GeoWindSettings(BaseSettings):
    """Defaults for construction, export, and console output."""

    edge_length: str = Field(
        default="1", description="Exact rational edge length, e.g. 7/3."
    )
    float_digits: int = Field(default=17, ge=6, le=17)
    log_level: str = Field(default="WARNING")
    no_color: bool = Field(
        default=False, description="Disable ANSI styling in summaries."
    )

    model_config = SettingsConfigDict(
        env_file=(".env", ".env.local"),
        env_prefix="GEOWIND_",
        extra="ignore",
        env_file_encoding="utf-8",
    )


class AppSettings(BaseModel):
    """Aggregated settings object exposed to the rest of the application."""

    geowind: GeoWindSettings


@lru_cache(maxsize=1)
def get_settings() -> AppSettings:
    """Load and cache application settings."""

    return AppSettings(geowind=GeoWindSettings())


def setup_logging(log_level: str | None = None) -> None:
    """Configure logging for the application; records go to stderr."""

    settings = get_settings()
    level = (log_level or settings.geowind.log_level).upper()
    numeric_level = getattr(logging, level, logging.WARNING)

    logging.basicConfig(
        level=numeric_level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        force=True,
    )


__all__ = ["AppSettings", "GeoWindSettings", "get_settings", "setup_logging"]
