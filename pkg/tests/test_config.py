import json

import pytest

from src.config import DEFAULT_MAX_ENUMERATION_N, DEFAULT_PREFIX_SUFFIX_DEPTH, ConfigManager
from src.errors import InvalidInputError


def test_defaults(config_manager):
    config = config_manager.get_toolkit_config()
    assert config.max_enumeration_n == DEFAULT_MAX_ENUMERATION_N
    assert config.prefix_suffix_depth == DEFAULT_PREFIX_SUFFIX_DEPTH
    assert config.log_level == "WARNING"
    assert config.log_file is None


def test_environment_overrides(config_manager, monkeypatch, tmp_path):
    monkeypatch.setenv("CBC_MAX_N", "5")
    monkeypatch.setenv("CBC_DEPTH_BOUND", "not a number")
    config = ConfigManager(config_path=str(tmp_path / "config.json")).get_toolkit_config()
    assert config.max_enumeration_n == 5
    assert config.prefix_suffix_depth == DEFAULT_PREFIX_SUFFIX_DEPTH


def test_config_file(config_manager, tmp_path):
    path = tmp_path / "toolkit.json"
    path.write_text(json.dumps({"max_enumeration_n": 4, "stable_closure_cap": 50, "unrelated": True}))
    config = ConfigManager(config_path=str(path)).get_toolkit_config()
    assert config.max_enumeration_n == 4
    assert config.stable_closure_cap == 50


def test_config_json_variable(config_manager, monkeypatch, tmp_path):
    monkeypatch.setenv("CONFIG_JSON", json.dumps({"krasner_max_n": 12}))
    config = ConfigManager(config_path=str(tmp_path / "config.json")).get_toolkit_config()
    assert config.krasner_max_n == 12


def test_command_line_overrides(config_manager):
    config = config_manager.get_toolkit_config(max_enumeration_n=3, prefix_suffix_depth=None)
    assert config.max_enumeration_n == 3
    assert config.prefix_suffix_depth == DEFAULT_PREFIX_SUFFIX_DEPTH
    with pytest.raises(InvalidInputError):
        config_manager.get_toolkit_config(stable_closure_cap=0)


def test_environment_wins_over_config_file(config_manager, monkeypatch, tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"max_enumeration_n": 4, "stable_closure_cap": 50, "log_level": "INFO"}))
    monkeypatch.setenv("CBC_MAX_N", "5")
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    config = ConfigManager(config_path=str(path)).get_toolkit_config()
    assert config.max_enumeration_n == 5
    assert config.stable_closure_cap == 50
    assert config.log_level == "DEBUG"


def test_environment_wins_over_example_file(config_manager, monkeypatch, tmp_path):
    (tmp_path / "config.json.example").write_text(json.dumps({"max_enumeration_n": 4}))
    monkeypatch.setenv("CBC_MAX_N", "5")
    assert ConfigManager().get_toolkit_config().max_enumeration_n == 5
