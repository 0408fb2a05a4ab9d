"""Runtime settings read from the environment."""

from __future__ import annotations

import os
from typing import Annotated, ClassVar, Literal, Mapping

from pydantic import BaseModel, BeforeValidator, Field


def _upper(value: object) -> object:
    return value.upper() if isinstance(value, str) else value


LogLevel = Annotated[
    Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], BeforeValidator(_upper)
]


class Settings(BaseModel):
    """Guards and log level for the command-line front end."""

    max_rank: int = Field(
        8, ge=0, description="Largest poset rank accepted without --force"
    )
    oracle_max_rank: int = Field(
        3, ge=0, description="Largest rank on which the oracle suite runs"
    )
    log_level: LogLevel = Field("WARNING", description="Logging level name")

    ENV_PREFIX: ClassVar[str] = "EXAB_"

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> "Settings":
        """Build settings from ``EXAB_*`` environment variables.

        >>> Settings.from_env({"EXAB_MAX_RANK": "5"}).max_rank
        5
        >>> Settings.from_env({"EXAB_LOG_LEVEL": "info"}).log_level
        'INFO'
        """
        if environ is None:
            environ = os.environ
        values: dict[str, str] = {}
        for name in cls.model_fields:
            key = f"{cls.ENV_PREFIX}{name.upper()}"
            if key in environ:
                values[name] = environ[key]
        return cls.model_validate(values)
