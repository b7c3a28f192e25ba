#!/usr/bin/env python3
"""
Configuration Validator
Validates config/global.yaml, an optional override file and config/presets.yaml
"""

import sys
import logging
import argparse
from pathlib import Path

# Add src directory to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import yaml
from dotenv import load_dotenv

from config_manager import ConfigLoader, ConfigValidator

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def _report(what: str, errors, warnings) -> bool:
    """Log validation results; True if there are no errors"""
    if errors:
        logger.error(f"{what}: validation FAILED with {len(errors)} errors:")
        for error in errors:
            logger.error(f"  ERROR: {error}")

    if warnings:
        logger.warning(f"{what}: found {len(warnings)} warnings:")
        for warning in warnings:
            logger.warning(f"  WARNING: {warning}")

    if not errors and not warnings:
        logger.info(f"{what}: VALID - no errors or warnings")

    return not errors


def validate_configuration(config_dir: str, override_file: str = None, verbose: bool = False) -> bool:
    """
    Validate settings and presets

    Args:
        config_dir: Configuration directory
        override_file: Optional YAML file merged over global.yaml
        verbose: Dump the merged settings

    Returns:
        True if valid
    """
    loader = ConfigLoader(config_dir)
    validator = ConfigValidator()

    try:
        settings = loader.load_complete_config(override_file)
        _, errors, warnings = validator.validate_settings(settings)
        settings_ok = _report('settings', errors, warnings)

        _, errors, warnings = validator.validate_presets(loader.load_presets())
        presets_ok = _report('presets', errors, warnings)

        if verbose:
            logger.info("Merged settings:")
            logger.info(yaml.dump(settings, default_flow_style=False))

        return settings_ok and presets_ok

    except FileNotFoundError as e:
        logger.error(f"Configuration file not found: {e}")
        return False
    except yaml.YAMLError as e:
        logger.error(f"Invalid YAML: {e}")
        return False


def main():
    """Main function"""
    parser = argparse.ArgumentParser(description='Validate Tutte Split configuration files')
    parser.add_argument('--config-dir', '-d', default=str(Path(__file__).parent.parent / 'config'),
                        help='Configuration directory')
    parser.add_argument('--file', '-f', default=None, help='Override file to validate with global.yaml')
    parser.add_argument('--verbose', '-v', action='store_true', help='Verbose output')

    args = parser.parse_args()

    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    load_dotenv()
    success = validate_configuration(args.config_dir, args.file, args.verbose)
    sys.exit(0 if success else 1)


if __name__ == '__main__':
    main()
