"""
Logger factory.
See: docs/UTILS.md
"""

import logging
import os
import sys

_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_logger(name: str, level: int | str | None = None) -> logging.Logger:
    """Get a structured logger instance.

    Handlers go to stderr so that stdout stays a clean report stream for the CLI.
    The level defaults to ``SYNALG_LOG_LEVEL`` (or WARNING).
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False
        if level is None:
            level = os.getenv("SYNALG_LOG_LEVEL", "WARNING").upper()

    if level is not None:
        logger.setLevel(level)

    return logger


def set_log_level(level: int | str) -> None:
    """Apply ``level`` to every synalg logger created so far."""
    for name in list(logging.root.manager.loggerDict):
        if name == "synalg" or name.startswith("synalg."):
            logging.getLogger(name).setLevel(level)
