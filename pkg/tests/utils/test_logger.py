import logging
import sys

from synalg.utils.logger import get_logger, set_log_level


def test_handler_writes_to_stderr():
    logger = get_logger("synalg.tests.stderr")
    assert len(logger.handlers) == 1
    handler = logger.handlers[0]
    assert isinstance(handler, logging.StreamHandler)
    assert handler.stream is sys.stderr
    assert not logger.propagate


def test_handlers_are_not_duplicated():
    first = get_logger("synalg.tests.once")
    second = get_logger("synalg.tests.once")
    assert first is second
    assert len(second.handlers) == 1


def test_level_from_environment(monkeypatch):
    monkeypatch.setenv("SYNALG_LOG_LEVEL", "info")
    assert get_logger("synalg.tests.env").level == logging.INFO


def test_explicit_level():
    assert get_logger("synalg.tests.explicit", "ERROR").level == logging.ERROR


def test_set_log_level_touches_only_synalg_loggers():
    ours = get_logger("synalg.tests.bulk", "WARNING")
    theirs = logging.getLogger("elsewhere.tests.bulk")
    theirs.setLevel(logging.WARNING)
    set_log_level("DEBUG")
    assert ours.level == logging.DEBUG
    assert theirs.level == logging.WARNING
    set_log_level("WARNING")
