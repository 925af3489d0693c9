import logging
import sys
from logging.handlers import RotatingFileHandler

import pytest

from src.utils.logger import ToolkitLogger, parse_level, setup_logging


@pytest.fixture
def root_handlers():
    root = logging.getLogger()
    saved, level = root.handlers[:], root.level
    yield root
    for handler in root.handlers[:]:
        root.removeHandler(handler)
        handler.close()
    for handler in saved:
        root.addHandler(handler)
    root.setLevel(level)


def test_parse_level():
    assert parse_level("debug") == logging.DEBUG
    assert parse_level(" Error ") == logging.ERROR
    assert parse_level("chatty") == logging.WARNING
    assert parse_level(None, logging.INFO) == logging.INFO


def test_console_only(root_handlers):
    logger = setup_logging("info")
    assert logger.name == "src"
    assert len(root_handlers.handlers) == 1
    console = root_handlers.handlers[0]
    assert console.stream is sys.stderr
    assert console.level == logging.INFO
    assert logging.getLogger("networkx").level == logging.WARNING


def test_file_handler_records_debug(root_handlers, tmp_path):
    log_file = tmp_path / "logs" / "bayonet.log"
    setup_logging("WARNING", str(log_file))
    setup_logging("WARNING", str(log_file))
    file_handlers = [h for h in root_handlers.handlers if isinstance(h, RotatingFileHandler)]
    assert len(root_handlers.handlers) == 2
    assert len(file_handlers) == 1
    ToolkitLogger("src.tests").log_search("is_code", 12, "dangling suffixes")
    file_handlers[0].flush()
    assert "is_code - explored 12 - dangling suffixes" in log_file.read_text()
