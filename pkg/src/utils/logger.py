import logging
import sys

from src.utils.config import LOG_FORMAT, LOG_LEVEL

_configured = False


def configure_logging(level=None):
    """
    Configure the root toolkit logger once

    Args:
        level: Level name or number (default: LOG_LEVEL from config)
    """
    global _configured
    root = logging.getLogger("src")
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.propagate = False
        _configured = True
    root.setLevel(level or LOG_LEVEL)
    return root


def get_logger(name):
    """Return a module logger below the toolkit root"""
    return logging.getLogger(name)
