"""Run settings drawn from the environment."""

import pytest

from conebound.settings import Settings


def test_defaults():
    settings = Settings()
    assert settings.value(Settings.THREADS) == 1
    assert settings.value(Settings.BLOCK_ROWS) == 64
    assert settings.value(Settings.LOG_LEVEL) == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MB_GRID", "250")
    monkeypatch.setenv("MB_LOG_LEVEL", "debug")
    settings = Settings()
    assert settings.value("grid") == 250
    assert settings.value("log_level") == "DEBUG"


def test_invalid_environment_is_ignored(monkeypatch, caplog):
    monkeypatch.setenv("MB_THREADS", "many")
    settings = Settings()
    assert settings.value("threads") == 1
    assert "MB_THREADS" in caplog.text


def test_update_and_reload(monkeypatch):
    settings = Settings()
    assert settings.update("seed", "0") == "Setting `seed` to `0`!"
    settings.update("samples", 42)
    assert settings.value("samples") == 42
    settings.reload()
    assert settings.value("samples") == 10000


@pytest.mark.parametrize("key, value", [("threads", 0), ("seed", -1), ("log_level", "LOUD"), ("colour", 1)])
def test_update_rejects(key, value):
    with pytest.raises(ValueError):
        Settings().update(key, value)


def test_unknown_key():
    with pytest.raises(ValueError):
        Settings().value("colour")
    assert Settings().parameter_information("colour") == "Unknown parameter `colour`!"
