"""
Configuration Manager
Validated, cached settings and presets for the command line
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .config_loader import ConfigLoader
from .config_validator import ConfigValidator

logger = logging.getLogger(__name__)

ValidationResult = Tuple[bool, List[str], List[str]]


class ConfigManager:
    """
    Entry point for configuration

    Settings are cached per override file and presets once; clear_cache()
    forces a reload.
    """

    def __init__(self, config_dir: Union[str, Path] = "config"):
        self.loader = ConfigLoader(config_dir)
        self.validator = ConfigValidator()
        self._settings: Dict[str, Dict[str, Any]] = {}
        self._presets: Optional[Dict[str, Any]] = None

    @staticmethod
    def _raise_if_invalid(what: str, result: ValidationResult) -> None:
        is_valid, errors, warnings = result
        for warning in warnings:
            logger.warning(f"{what} warning: {warning}")
        if not is_valid:
            message = f"Invalid {what.lower()}:\n" + "\n".join(errors)
            logger.error(message)
            raise ValueError(message)

    def get_settings(self, override_file: Optional[str] = None, validate: bool = True) -> Dict[str, Any]:
        """
        Settings from global.yaml, optionally merged with an override file

        Args:
            override_file: YAML file merged over config/global.yaml
            validate: Check limits, corpus bounds and points before returning

        Returns:
            Settings dictionary

        Raises:
            ValueError: If the merged settings are invalid
            FileNotFoundError: If the override file does not exist
        """
        key = override_file or ''
        if key in self._settings:
            logger.debug(f"Using cached settings{f' for {override_file}' if override_file else ''}")
            return self._settings[key]

        settings = self.loader.load_complete_config(override_file)
        if validate:
            self._raise_if_invalid('Configuration', self.validator.validate_settings(settings))
        self._settings[key] = settings
        return settings

    def get_presets(self, validate: bool = True) -> Dict[str, Any]:
        """
        All specialization presets

        Raises:
            ValueError: If any preset is invalid
        """
        if self._presets is None:
            presets = self.loader.load_presets()
            if validate:
                self._raise_if_invalid('Presets', self.validator.validate_presets(presets))
            self._presets = presets
        return self._presets

    def get_preset(self, name: str) -> Dict[str, Any]:
        """
        One preset by name, without any ":q" parameter

        Raises:
            ValueError: If the preset is unknown
        """
        presets = self.get_presets()
        if name not in presets:
            raise ValueError(f"Unknown preset '{name}'; available: {', '.join(sorted(presets))}")
        return presets[name]

    def list_presets(self) -> List[str]:
        return self.loader.list_presets()

    def validate_all(self) -> Dict[str, ValidationResult]:
        """
        Validate settings and presets without raising

        Returns:
            'settings' and 'presets' mapped to (is_valid, errors, warnings)
        """
        checks = {
            'settings': lambda: self.validator.validate_settings(self.loader.load_complete_config()),
            'presets': lambda: self.validator.validate_presets(self.loader.load_presets()),
        }
        results: Dict[str, ValidationResult] = {}
        for name, check in checks.items():
            try:
                results[name] = check()
            except Exception as e:
                logger.error(f"Error validating {name}: {e}")
                results[name] = (False, [str(e)], [])
        return results

    def clear_cache(self) -> None:
        self._settings = {}
        self._presets = None
        logger.debug("Configuration cache cleared")
