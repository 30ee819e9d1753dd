import logging

import pytest

from src.config import AppSettings


@pytest.fixture(autouse=True)
def clean_tolerance(monkeypatch):
    monkeypatch.delenv(AppSettings.TOLERANCE_ENV_VAR, raising=False)


def test_default_tolerance():
    assert AppSettings.get_default_tolerance() == AppSettings.DEFAULT_TOLERANCE


def test_environment_override(monkeypatch):
    monkeypatch.setenv(AppSettings.TOLERANCE_ENV_VAR, "1e-6")
    assert AppSettings.get_default_tolerance() == 1e-6


@pytest.mark.parametrize("raw", ["abc", "0", "2.5", "-1e-3"])
def test_rejected_values_are_logged(monkeypatch, caplog, capsys, raw):
    monkeypatch.setenv(AppSettings.TOLERANCE_ENV_VAR, raw)
    with caplog.at_level(logging.WARNING, logger="src.config.settings"):
        assert AppSettings.get_default_tolerance() == AppSettings.DEFAULT_TOLERANCE
    assert AppSettings.TOLERANCE_ENV_VAR in caplog.text
    assert capsys.readouterr().err == ""
