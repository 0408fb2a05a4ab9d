"""Tests for environment settings."""

import pytest
from pydantic import ValidationError

from exab.config import Settings


def test_defaults() -> None:
    """Test settings without environment variables."""
    settings = Settings.from_env({})
    assert settings.max_rank == 8
    assert settings.oracle_max_rank == 3
    assert settings.log_level == "WARNING"


def test_from_env() -> None:
    """Test EXAB_* variables override the defaults and others are ignored."""
    settings = Settings.from_env(
        {"EXAB_MAX_RANK": "5", "EXAB_LOG_LEVEL": "debug", "MAX_RANK": "1"}
    )
    assert settings.max_rank == 5
    assert settings.log_level == "DEBUG"
    assert settings.oracle_max_rank == 3


@pytest.mark.parametrize("value", ["-1", "many"])
def test_invalid_values(value: str) -> None:
    """Test invalid ranks are rejected."""
    with pytest.raises(ValidationError):
        Settings.from_env({"EXAB_ORACLE_MAX_RANK": value})


@pytest.mark.parametrize("value", ["bogus", "", "10"])
def test_invalid_log_level(value: str) -> None:
    """Test unknown logging level names are rejected."""
    with pytest.raises(ValidationError):
        Settings.from_env({"EXAB_LOG_LEVEL": value})


def test_log_level_is_case_insensitive() -> None:
    """Test level names are normalised to upper case."""
    assert Settings.from_env({"EXAB_LOG_LEVEL": "Error"}).log_level == "ERROR"
    assert Settings.model_validate({"log_level": "critical"}).log_level == "CRITICAL"


def test_reads_process_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the process environment is the default source."""
    monkeypatch.setenv("EXAB_MAX_RANK", "2")
    assert Settings.from_env().max_rank == 2
