"""
Configuration loading.
See: docs/UTILS.md
"""

import os
from pathlib import Path
from typing import Any, Literal

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from synalg.core.exceptions import ConfigurationError

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class EngineConfig(BaseModel):
    """Settings shared by the library sweeps and the command line."""

    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    monoid_size_cap: int | None = Field(default=None, ge=1)
    oracle_max_carrier: int = Field(default=5, ge=1, le=5)
    seed: int = 0
    sweep_samples: int = Field(default=200, ge=1)
    ex512_bound: int = Field(default=64, ge=2)
    ex512_xmax: int = Field(default=4096, ge=2)
    ex512_kind: Literal["powers-of-two", "primes"] = "powers-of-two"
    ex517_bound: int = Field(default=20, ge=3)

    @field_validator("log_level")
    @classmethod
    def level_must_be_known(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"must be one of {sorted(_LOG_LEVELS)}")
        return level


def load_config(
    *,
    env_prefix: str = "SYNALG_",
    dotenv_path: str | Path | None = ".env",
    **overrides: Any,
) -> EngineConfig:
    """Build an EngineConfig from a .env file, the environment, then explicit overrides.

    Later sources win. Keys are matched case-insensitively after stripping ``env_prefix``.
    """
    values: dict[str, Any] = {}
    known = set(EngineConfig.model_fields)

    sources: list[dict[str, str | None]] = []
    if dotenv_path is not None and Path(dotenv_path).is_file():
        sources.append(dict(dotenv_values(dotenv_path)))
    sources.append(dict(os.environ))

    for source in sources:
        for key, raw in source.items():
            if raw is None or not key.upper().startswith(env_prefix):
                continue
            field = key[len(env_prefix) :].lower()
            if field in known:
                values[field] = raw

    values.update({k: v for k, v in overrides.items() if v is not None})

    unknown = set(values) - known
    if unknown:
        raise ConfigurationError(f"Unknown configuration keys: {sorted(unknown)}", details={"keys": sorted(unknown)})

    try:
        return EngineConfig(**values)
    except ValidationError as e:
        first = e.errors()[0]
        key = ".".join(str(p) for p in first["loc"])
        raise ConfigurationError(
            f"Invalid value for '{key}': {first['msg']}", original_error=e, details={"key": key}
        ) from e
