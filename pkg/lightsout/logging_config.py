"""Logging configuration for lightsout.

Standard output carries JSON reports only, so every handler here writes to
standard error or to a rotating log file.
"""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path

# Create logger
logger = logging.getLogger("lightsout")
logger.setLevel(logging.DEBUG)

# Format: timestamp - level - message
formatter = logging.Formatter(
    "%(asctime)s - %(levelname)s - %(name)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

# Console handler on stderr; only warnings and errors unless configured
console_handler = logging.StreamHandler()
console_handler.setLevel(logging.WARNING)
console_handler.setFormatter(formatter)
logger.addHandler(console_handler)

_file_handler: RotatingFileHandler | None = None


def configure_logging(level: str = "WARNING", log_file: str | Path | None = None) -> None:
    """Set the console level and optionally attach a rotating log file.

    Args:
        level: Level name for the console handler (e.g. 'DEBUG', 'INFO')
        log_file: Path of a log file (1MB max, keep 3 backups), or None
    """
    global _file_handler

    console_handler.setLevel(getattr(logging, level.upper(), logging.WARNING))

    if _file_handler is not None:
        logger.removeHandler(_file_handler)
        _file_handler.close()
        _file_handler = None

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        _file_handler = RotatingFileHandler(
            path,
            maxBytes=1_000_000,  # 1MB
            backupCount=3,
            encoding="utf-8",
        )
        _file_handler.setLevel(logging.DEBUG)
        _file_handler.setFormatter(formatter)
        logger.addHandler(_file_handler)


def get_logger(name: str = None) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Optional sub-logger name (e.g., 'gf2', 'structure')

    Returns:
        Logger instance
    """
    if name:
        return logging.getLogger(f"lightsout.{name}")
    return logger
