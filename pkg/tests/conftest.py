import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.cbc.core import make_cbc
from src.config import ConfigManager
from src.models.cbc import CbcFamily

EIGHT_CBC_PAIRS = [(0, 0), (4, 0), (0, 1), (4, 1), (1, 2), (5, 2), (3, 3), (7, 7)]

# a^i b a^j words whose mu images fail for d = 2 and d = 3 on both sides
STRETCHED_PAIRS = [(0, 0), (0, 2), (0, 8), (0, 10), (1, 8), (1, 10), (4, 0), (4, 2),
                   (5, 0), (5, 3), (5, 6), (9, 0), (9, 2)]


@pytest.fixture
def eight_cbc():
    return make_cbc(8, EIGHT_CBC_PAIRS)


@pytest.fixture
def eight_family(eight_cbc):
    return CbcFamily.of([eight_cbc])


@pytest.fixture
def four_cbc():
    """{b, ba, aba^2, a^3ba^3}, one H_4 expansion of {b}"""
    return make_cbc(4, [(0, 0), (0, 1), (1, 2), (3, 3)])


@pytest.fixture
def stretched_pairs():
    return list(STRETCHED_PAIRS)


@pytest.fixture
def config_manager(tmp_path, monkeypatch):
    """Defaults only: no config file and no overriding environment"""
    monkeypatch.chdir(tmp_path)
    for name in ("CONFIG_JSON", "CBC_MAX_N", "CBC_CLOSURE_CAP", "CBC_DEPTH_BOUND", "CBC_SPLIT_CAP",
                 "CBC_KRASNER_MAX_N", "CBC_EXTEND_MAX_N", "CBC_OMEGA_SWEEP", "LOG_LEVEL", "LOG_FILE"):
        monkeypatch.delenv(name, raising=False)
    return ConfigManager(config_path=str(tmp_path / "config.json"))
