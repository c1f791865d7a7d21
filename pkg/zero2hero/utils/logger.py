import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from zero2hero.settings import settings

CONSOLE_FORMAT = '%(levelname)s %(name)s: %(message)s'
FILE_FORMAT = '%(asctime)s %(levelname)s [%(name)s:%(lineno)d] %(message)s'


def _level_from_settings() -> int:
    level = logging.getLevelName(settings.LOG_LEVEL.upper())
    return level if isinstance(level, int) else logging.WARNING


class Logger:
    """Per-module loggers for the zero2hero tool, all writing to stderr."""

    _loggers: dict[str, logging.Logger] = {}
    _level: int | None = None

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Get or create a logger with the specified name.

        Reports own stdout; every log line goes to stderr and, with LOG_TO_FILE, to
        LOG_DIR/zero2hero.log as well.
        """
        if name in cls._loggers:
            return cls._loggers[name]

        logger = logging.getLogger(name)
        logger.setLevel(cls._level if cls._level is not None else _level_from_settings())
        logger.propagate = False

        if not logger.handlers:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
            logger.addHandler(console_handler)

            if settings.LOG_TO_FILE:
                logger.addHandler(cls._file_handler())

        cls._loggers[name] = logger
        return logger

    @staticmethod
    def _file_handler() -> logging.Handler:
        log_dir = Path(settings.LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)

        handler = RotatingFileHandler(
            log_dir / f'{settings.TOOL_NAME}.log',
            maxBytes=settings.LOG_MAX_BYTES,
            backupCount=settings.LOG_BACKUP_COUNT,
            encoding='utf-8',
        )
        handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
        return handler

    @classmethod
    def set_all_levels(cls, level: int):
        """Set the level of every logger, including ones created later."""
        cls._level = level
        for logger in cls._loggers.values():
            logger.setLevel(level)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance.

    Usage:
        from zero2hero.utils.logger import get_logger
        logger = get_logger(__name__)
        logger.warning('eq#3 skipped: mismatched braces')
    """
    return Logger.get_logger(name)
