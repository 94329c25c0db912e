import logging

import pytest

from utils_ops.envHandler import DEFAULT_SEED, default_seed, getint
from utils_ops.errors import BalanceError, HypothesisError, LinearizationMismatch, NumericalDiagnosticError, PolyRankError
from utils_ops.logs import LOGGING_PATH, Logger
from utils_ops.paths import reportPath
from utils_ops.retry import retry


def test_retry_stops_at_first_success():
    calls = []

    @retry(retries=3, exceptions=(ValueError,))
    def flaky():
        calls.append(1)
        if len(calls) < 2:
            raise ValueError("not yet")
        return "done"

    assert flaky() == "done"
    assert len(calls) == 2


def test_retry_reraises_the_last_error():
    seen = []

    @retry(retries=2, exceptions=(ValueError,), on_retry=lambda attempt, e: seen.append(attempt))
    def broken():
        raise ValueError(f"attempt {len(seen)}")

    with pytest.raises(ValueError, match="attempt 2"):
        broken()
    assert seen == [0, 1]


def test_retry_lets_other_errors_through():
    calls = []

    @retry(retries=5, exceptions=(ValueError,))
    def broken():
        calls.append(1)
        raise KeyError("x")

    with pytest.raises(KeyError):
        broken()
    assert len(calls) == 1


def test_getint(monkeypatch):
    monkeypatch.setenv("POLYRANK_TEST_INT", "12")
    assert getint("POLYRANK_TEST_INT", 3) == 12
    monkeypatch.setenv("POLYRANK_TEST_INT", " ")
    assert getint("POLYRANK_TEST_INT", 3) == 3
    monkeypatch.delenv("POLYRANK_TEST_INT")
    assert getint("POLYRANK_TEST_INT", 3) == 3


def test_default_seed(monkeypatch):
    monkeypatch.delenv("POLYRANK_SEED", raising=False)
    assert default_seed() == DEFAULT_SEED
    monkeypatch.setenv("POLYRANK_SEED", "42")
    assert default_seed() == 42


def test_error_hierarchy():
    assert issubclass(HypothesisError, ValueError)
    assert issubclass(BalanceError, NumericalDiagnosticError)
    assert issubclass(LinearizationMismatch, PolyRankError)


def test_diagnostics_are_part_of_the_message():
    e = BalanceError("index-sum balance violated", {"residual": -2})
    assert e.diagnostics == {"residual": -2}
    assert str(e) == "index-sum balance violated | Diagnostics: {'residual': -2}"
    assert str(BalanceError("plain")) == "plain"


def test_report_path(tmp_path):
    target = reportPath(tmp_path / "runs" / "sweep", ".csv")
    assert target == tmp_path / "runs" / "sweep.csv"
    assert target.parent.is_dir()
    assert reportPath(tmp_path / "out.json", ".csv").name == "out.csv"


def test_logger_appends_error_and_params(caplog):
    logger = Logger("LoggerSuffixes")
    with caplog.at_level(logging.DEBUG, logger="LoggerSuffixes"):
        logger.log("warning", "draw rejected", ValueError("bad rank"), params={"seed": 3})
        logger.log("verbose", "unknown level")
    assert "draw rejected | Error: bad rank | Params: {'seed': 3}" in caplog.text
    assert "Invalid log level: verbose" in caplog.text


def test_logger_handlers_are_not_duplicated():
    first = Logger("LoggerOnce")
    second = Logger("LoggerOnce")
    assert first.logger is second.logger
    assert len(second.logger.handlers) == (2 if LOGGING_PATH else 1)
