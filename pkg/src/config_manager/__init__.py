"""
Configuration Manager Module
Handles loading and validation of YAML settings and specialization presets
"""

from .config_loader import ConfigLoader
from .config_validator import PRESET_KINDS, ConfigValidator
from .config_manager import ConfigManager

__all__ = ['ConfigLoader', 'ConfigValidator', 'ConfigManager', 'PRESET_KINDS']
