"""
Configuration Loader
Reads config/global.yaml, an optional override file and config/presets.yaml,
resolving ${VAR} and ${VAR:-default} placeholders from the environment
"""

import logging
import os
import re
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

logger = logging.getLogger(__name__)

SETTINGS_FILE = 'global.yaml'
PRESETS_FILE = 'presets.yaml'

PLACEHOLDER = re.compile(r'\$\{([^}^{]+)\}')


class ConfigLoader:
    """Loads settings and presets for the tutte-split commands"""

    def __init__(self, config_dir: Union[str, Path] = "config"):
        """
        Args:
            config_dir: Directory holding global.yaml and presets.yaml
        """
        self.config_dir = Path(config_dir)

    def load_yaml(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        """
        Parse a YAML mapping and resolve its placeholders

        A value that is exactly one placeholder takes the YAML type of its
        replacement, so TUTTE_MAX_N=4 yields the integer 4.

        Raises:
            FileNotFoundError: If the file does not exist
            yaml.YAMLError: If the YAML is malformed
            ValueError: If the top level is not a mapping
        """
        path = Path(file_path)
        try:
            data = yaml.safe_load(path.read_text(encoding='utf-8'))
        except FileNotFoundError:
            logger.error(f"Configuration file not found: {path}")
            raise
        except yaml.YAMLError as e:
            logger.error(f"Invalid YAML in {path}: {e}")
            raise

        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f"{path} must contain a mapping at the top level")
        logger.debug(f"Loaded configuration from {path}")
        return self._resolve(data)

    def _resolve(self, node: Any) -> Any:
        if isinstance(node, dict):
            return {key: self._resolve(value) for key, value in node.items()}
        if isinstance(node, list):
            return [self._resolve(value) for value in node]
        if not isinstance(node, str) or '${' not in node:
            return node

        substituted = self._substitute_env_vars(node)
        if substituted != node and PLACEHOLDER.fullmatch(node.strip()):
            typed = yaml.safe_load(substituted) if substituted.strip() else None
            if isinstance(typed, (bool, int, float, str)):
                return typed
        return substituted

    def _substitute_env_vars(self, content: str) -> str:
        """
        Replace ${VAR} and ${VAR:-default} in a string

        Unset variables without a default keep their placeholder.
        """
        def replacer(match):
            var_spec = match.group(1)
            if ':-' in var_spec:
                var_name, default_value = var_spec.split(':-', 1)
                return os.getenv(var_name.strip(), default_value.strip())

            var_name = var_spec.strip()
            value = os.getenv(var_name)
            if value is None:
                logger.warning(f"Environment variable '{var_name}' not set, keeping placeholder")
                return match.group(0)
            return value

        return PLACEHOLDER.sub(replacer, content)

    def load_global_config(self) -> Dict[str, Any]:
        path = self.config_dir / SETTINGS_FILE
        if not path.exists():
            logger.warning(f"{path} not found, using built-in limits only")
            return {}
        return self.load_yaml(path)

    def load_presets(self) -> Dict[str, Any]:
        """
        Preset definitions keyed by name

        Returns:
            The 'presets' mapping of presets.yaml; empty if the file is missing
        """
        path = self.config_dir / PRESETS_FILE
        if not path.exists():
            logger.warning(f"{path} not found, no presets available")
            return {}
        return self.load_yaml(path).get('presets') or {}

    @staticmethod
    def merge_configs(*configs: Optional[Dict[str, Any]]) -> Dict[str, Any]:
        """
        Deep merge settings; later mappings win and None entries are skipped

        Nested mappings merge key by key. Lists such as point lists or
        terminal counts are replaced whole.
        """
        def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
            result = dict(base)
            for key, value in override.items():
                if isinstance(result.get(key), dict) and isinstance(value, dict):
                    result[key] = deep_merge(result[key], value)
                else:
                    result[key] = value
            return result

        merged: Dict[str, Any] = {}
        for config in configs:
            if config:
                merged = deep_merge(merged, config)
        return merged

    def load_complete_config(self, override_file: Optional[str] = None) -> Dict[str, Any]:
        """
        Settings from global.yaml with an optional override file on top

        Args:
            override_file: YAML file whose keys take precedence

        Returns:
            Merged, unvalidated settings
        """
        override = self.load_yaml(override_file) if override_file else {}
        merged = self.merge_configs(self.load_global_config(), override)
        if override_file:
            logger.info(f"Settings from {self.config_dir / SETTINGS_FILE} overridden by {override_file}")
        return merged

    def list_presets(self) -> List[str]:
        return sorted(self.load_presets())
