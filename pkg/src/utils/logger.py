import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

CONSOLE_FORMAT = "%(levelname)s %(name)s: %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)-8s %(name)s %(funcName)s:%(lineno)d %(message)s"
FILE_MAX_BYTES = 10 * 1024 * 1024
FILE_BACKUPS = 5
QUIET_LIBRARIES = ("networkx",)


def parse_level(name: Optional[str], default: int = logging.WARNING) -> int:
    """Level number for a name such as "debug"; unknown names give the default"""
    if not name:
        return default
    level = logging.getLevelName(name.strip().upper())
    return level if isinstance(level, int) else default


def _file_handler(log_file: str) -> logging.Handler:
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = RotatingFileHandler(path, maxBytes=FILE_MAX_BYTES, backupCount=FILE_BACKUPS)
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt="%Y-%m-%dT%H:%M:%S"))
    return handler


def setup_logging(log_level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """
    Route toolkit records to stderr at log_level and, with log_file, to a
    rotating file at DEBUG

    Calling again replaces the handlers installed by an earlier call. Returns
    the logger of the src package.
    """
    level = parse_level(log_level)
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(level)
    console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    handlers = [console]
    if log_file:
        handlers.append(_file_handler(log_file))

    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
    root.setLevel(logging.DEBUG if log_file else level)
    for handler in handlers:
        root.addHandler(handler)
    for name in QUIET_LIBRARIES:
        logging.getLogger(name).setLevel(logging.WARNING)
    return logging.getLogger("src")


class ToolkitLogger:
    """Consistent one-line records for verdicts and searches"""

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)

    def log_verdict(self, operation: str, verdict: str, details: Optional[str] = None):
        message = f"{operation} - verdict: {verdict}"
        if details:
            message += f" - {details}"
        self.logger.info(message)

    def log_search(self, operation: str, explored: int, details: Optional[str] = None):
        message = f"{operation} - explored {explored}"
        if details:
            message += f" - {details}"
        self.logger.debug(message)

    def log_envelope(self, operation: str, limit: int, reached: Optional[int] = None):
        message = f"{operation} - envelope {limit} exceeded"
        if reached is not None:
            message += f" (reached {reached})"
        self.logger.warning(message)

    def log_error(self, error: Exception, context: Optional[str] = None):
        """Log errors with context"""
        if context:
            self.logger.error(f"{context}: {str(error)}", exc_info=True)
        else:
            self.logger.error(str(error), exc_info=True)
