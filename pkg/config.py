import copy
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "config" / "default_config.yaml"


class Config:
    """Layered configuration: the packaged defaults overlaid with an optional user file."""

    def __init__(self, settings: Dict[str, Any]):
        self.settings = settings

    @classmethod
    def load(cls, config_path: Optional[str] = None) -> "Config":
        """Load configuration from YAML, overlaying ``config_path`` on the defaults."""
        settings = cls._read(DEFAULT_CONFIG_PATH)
        if config_path:
            overrides = cls._read(Path(config_path))
            settings = cls._merge(settings, overrides)
            logger.info(f"Configuration loaded from {config_path}")
        return cls(settings)

    @staticmethod
    def _read(path: Path) -> Dict[str, Any]:
        try:
            with open(path, "r") as f:
                data = yaml.safe_load(f) or {}
        except FileNotFoundError as e:
            raise ConfigurationError(f"Configuration file not found: {path}", {"path": str(path)}) from e
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid configuration format: {e}", {"path": str(path)}) from e
        if not isinstance(data, dict):
            raise ConfigurationError("Configuration root must be a mapping", {"path": str(path)})
        return data

    @classmethod
    def _merge(cls, base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
        merged = copy.deepcopy(base)
        for key, value in overrides.items():
            if isinstance(value, dict) and isinstance(merged.get(key), dict):
                merged[key] = cls._merge(merged[key], value)
            else:
                merged[key] = value
        return merged

    def get(self, section: str, key: str, default: Any = None) -> Any:
        return self.settings.get(section, {}).get(key, default)

    def section(self, section: str) -> Dict[str, Any]:
        return dict(self.settings.get(section, {}))
