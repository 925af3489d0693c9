import json
import os
import logging
from typing import Dict, Any, Optional
from dataclasses import dataclass, asdict, replace
from dotenv import load_dotenv

from src.errors import InvalidInputError

logger = logging.getLogger(__name__)

DEFAULT_MAX_ENUMERATION_N = 6
DEFAULT_STABLE_CLOSURE_CAP = 100_000
DEFAULT_PREFIX_SUFFIX_DEPTH = 6
DEFAULT_PREFIX_SUFFIX_SPLIT_CAP = 200_000
DEFAULT_KRASNER_MAX_N = 64
DEFAULT_EXTEND_MAX_N = 64
DEFAULT_OMEGA_SWEEP_LENGTH = 4


@dataclass(frozen=True)
class ToolkitConfig:
    """Search envelopes and logging settings"""
    max_enumeration_n: int = DEFAULT_MAX_ENUMERATION_N
    stable_closure_cap: int = DEFAULT_STABLE_CLOSURE_CAP
    prefix_suffix_depth: int = DEFAULT_PREFIX_SUFFIX_DEPTH
    prefix_suffix_split_cap: int = DEFAULT_PREFIX_SUFFIX_SPLIT_CAP
    krasner_max_n: int = DEFAULT_KRASNER_MAX_N
    extend_max_n: int = DEFAULT_EXTEND_MAX_N
    omega_sweep_length: int = DEFAULT_OMEGA_SWEEP_LENGTH
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class ConfigManager:
    """Loads toolkit configuration from environment and config files"""

    INT_FIELDS = (
        "max_enumeration_n",
        "stable_closure_cap",
        "prefix_suffix_depth",
        "prefix_suffix_split_cap",
        "krasner_max_n",
        "extend_max_n",
        "omega_sweep_length",
    )

    ENV_VARIABLES = {
        "max_enumeration_n": "CBC_MAX_N",
        "stable_closure_cap": "CBC_CLOSURE_CAP",
        "prefix_suffix_depth": "CBC_DEPTH_BOUND",
        "prefix_suffix_split_cap": "CBC_SPLIT_CAP",
        "krasner_max_n": "CBC_KRASNER_MAX_N",
        "extend_max_n": "CBC_EXTEND_MAX_N",
        "omega_sweep_length": "CBC_OMEGA_SWEEP",
        "log_level": "LOG_LEVEL",
        "log_file": "LOG_FILE",
    }

    def __init__(self, config_path: str = "config.json"):
        load_dotenv()
        self.config_path = config_path
        self.config_data = {**self._load_config_file(), **self._environment_settings()}

    def _load_config_file(self) -> Dict[str, Any]:
        """Settings from CONFIG_JSON, the config file or config.json.example; empty without any"""
        config_json = os.getenv('CONFIG_JSON')
        if config_json:
            try:
                return json.loads(config_json)
            except json.JSONDecodeError:
                logger.warning("Failed to parse CONFIG_JSON environment variable")

        if os.path.exists(self.config_path):
            with open(self.config_path, 'r', encoding='utf-8') as f:
                return json.load(f)

        example_path = "config.json.example"
        if os.path.exists(example_path):
            logger.warning(f"Using {example_path}. Please create {self.config_path}")
            with open(example_path, 'r', encoding='utf-8') as f:
                return json.load(f)

        logger.debug("No config file found, using environment variables and defaults")
        return {}

    def _environment_settings(self) -> Dict[str, Any]:
        """Settings whose environment variable is set; these win over any file"""
        settings: Dict[str, Any] = {}
        for field_name, name in self.ENV_VARIABLES.items():
            raw = os.getenv(name)
            if raw is None or raw.strip() == "":
                continue
            if field_name not in self.INT_FIELDS:
                settings[field_name] = raw.strip()
                continue
            try:
                settings[field_name] = int(raw)
            except ValueError:
                logger.warning(f"Invalid {name}={raw!r}, ignored")
        return settings

    def get_toolkit_config(self, **overrides: Any) -> ToolkitConfig:
        """Complete configuration, with command-line overrides applied on top"""
        data = {key: value for key, value in self.config_data.items()
                if key in ToolkitConfig.__dataclass_fields__}
        config = ToolkitConfig(**data)

        changes = {key: value for key, value in overrides.items() if value is not None}
        if changes:
            config = replace(config, **changes)

        for field_name in self.INT_FIELDS:
            value = getattr(config, field_name)
            if not isinstance(value, int) or value < 1:
                raise InvalidInputError(f"{field_name} must be a positive integer, got {value!r}")
        return config
