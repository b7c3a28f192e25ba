"""
Configuration Validator
Validates settings and specialization presets against type and range rules
"""

import logging
from typing import Any, Dict, List, Tuple

from exact_algebra import RationalParseError, parse_rational

logger = logging.getLogger(__name__)

PRESET_KINDS = {
    'point': ('x', 'y'),
    'x_fixed': ('x',),
    'y_fixed': ('y',),
    'product': ('value',),
    'hyperbola': (),
    'free': (),
}

LOG_LEVELS = ['debug', 'info', 'warning', 'error', 'critical']
LOG_FORMATS = ['text', 'json']


class ConfigValidator:
    """Validates configuration files"""

    def __init__(self):
        """Initialize the ConfigValidator"""
        self.errors = []
        self.warnings = []

    def validate_settings(self, config: Dict[str, Any]) -> Tuple[bool, List[str], List[str]]:
        """
        Validate the global settings

        Args:
            config: Configuration dictionary to validate

        Returns:
            Tuple of (is_valid, errors, warnings)
        """
        self.errors = []
        self.warnings = []

        if 'limits' not in config:
            self.errors.append("Missing 'limits' section in configuration")
            return False, self.errors, self.warnings

        logging_config = config.get('system', {}).get('logging', {})
        if 'level' in logging_config:
            self._validate_enum(str(logging_config['level']).lower(), LOG_LEVELS)
        if 'format' in logging_config:
            self._validate_enum(str(logging_config['format']).lower(), LOG_FORMATS)

        limits = config['limits']
        self._validate_int_range(limits, 'max_n', 1, 6, required=True)
        self._validate_int_range(limits, 'max_oracle_edges', 1, 24, required=True)
        self._validate_int_range(limits, 'max_stirling_n', 0, 8)

        if 'corpus' in config:
            self._validate_corpus_config(config['corpus'], limits)

        if 'verification' in config:
            self._validate_verification_config(config['verification'])

        if 'bench' in config:
            bench = config['bench']
            self._validate_points(bench.get('points', []), 'bench.points')
            self._validate_int_range(bench, 'repeat', 1, 100)

        is_valid = len(self.errors) == 0
        return is_valid, self.errors, self.warnings

    def _validate_int_range(
        self,
        config: Dict[str, Any],
        field: str,
        low: int,
        high: int,
        required: bool = False
    ) -> bool:
        """Validate that a field coerces to an integer in [low, high]"""
        if field not in config:
            if required:
                self.errors.append(f"Required field '{field}' is missing")
            return not required

        try:
            value = int(config[field])
        except (TypeError, ValueError):
            self.errors.append(f"Field '{field}' must be an integer, got {config[field]!r}")
            return False

        if not low <= value <= high:
            self.errors.append(f"Field '{field}' must be between {low} and {high}, got {value}")
            return False
        return True

    def _validate_enum(self, value: str, allowed_values: List[str]) -> bool:
        """Validate that value is in allowed list"""
        if value not in allowed_values:
            self.errors.append(f"Value '{value}' must be one of: {', '.join(allowed_values)}")
            return False
        return True

    def _validate_rational(self, value: Any, location: str) -> bool:
        try:
            parse_rational(str(value))
            return True
        except RationalParseError as e:
            self.errors.append(f"{location}: {e}")
            return False

    def _validate_points(self, points: Any, location: str) -> bool:
        """Validate a list of [x, y] rational pairs"""
        if not isinstance(points, list):
            self.errors.append(f"{location} must be a list of [x, y] pairs")
            return False
        valid = True
        for i, point in enumerate(points):
            if not isinstance(point, (list, tuple)) or len(point) != 2:
                self.errors.append(f"{location}[{i}] must be an [x, y] pair")
                valid = False
                continue
            for coordinate in point:
                valid = self._validate_rational(coordinate, f"{location}[{i}]") and valid
        return valid

    def _validate_corpus_config(self, corpus: Dict[str, Any], limits: Dict[str, Any]) -> bool:
        """Validate random corpus parameters"""
        self._validate_int_range(corpus, 'seed', 0, 2 ** 32 - 1)
        self._validate_int_range(corpus, 'count', 0, 10000)
        self._validate_int_range(corpus, 'max_vertices', 1, 16)
        self._validate_int_range(corpus, 'max_edges', 0, 64)

        counts = corpus.get('terminal_counts', [])
        if not isinstance(counts, list) or not counts:
            self.errors.append("corpus.terminal_counts must be a non-empty list")
        else:
            try:
                cap = int(limits.get('max_n', 6))
            except (TypeError, ValueError):
                cap = 6
            for n in counts:
                if not isinstance(n, int) or not 1 <= n <= cap:
                    self.errors.append(f"corpus.terminal_counts entry {n!r} must be an integer in 1..{cap}")

        if 'parallel_edge_rate' in corpus:
            rate = corpus['parallel_edge_rate']
            if not isinstance(rate, (int, float)) or not 0 <= rate <= 1:
                self.errors.append("corpus.parallel_edge_rate must be a number in [0, 1]")

        if 'max_edges' in corpus and 'max_vertices' in corpus:
            try:
                if int(corpus['max_edges']) < int(corpus['max_vertices']) - 1:
                    self.warnings.append(
                        "corpus.max_edges is below max_vertices - 1; parts will be trees at most"
                    )
            except (TypeError, ValueError):
                pass

        return len(self.errors) == 0

    def _validate_verification_config(self, verification: Dict[str, Any]) -> bool:
        """Validate verification suite parameters"""
        for key in ('generic_points', 'x_one_points', 'y_one_points'):
            if key in verification:
                self._validate_points(verification[key], f"verification.{key}")

        for x, y in verification.get('x_one_points', []) or []:
            if self._parses(x) and parse_rational(str(x)) != 1:
                self.errors.append(f"verification.x_one_points entry ({x}, {y}) must have x = 1")
        for x, y in verification.get('y_one_points', []) or []:
            if self._parses(y) and parse_rational(str(y)) != 1:
                self.errors.append(f"verification.y_one_points entry ({x}, {y}) must have y = 1")

        self._validate_int_range(verification, 'random_matrices', 0, 10000)
        self._validate_int_range(verification, 'determinant_samples', 0, 1000)
        self._validate_int_range(verification, 'workers', 1, 64)
        return len(self.errors) == 0

    @staticmethod
    def _parses(value: Any) -> bool:
        try:
            parse_rational(str(value))
            return True
        except RationalParseError:
            return False

    def validate_presets(self, presets: Dict[str, Any]) -> Tuple[bool, List[str], List[str]]:
        """
        Validate specialization presets

        Args:
            presets: Mapping preset name -> preset definition

        Returns:
            Tuple of (is_valid, errors, warnings)
        """
        self.errors = []
        self.warnings = []

        for name, preset in presets.items():
            if not isinstance(preset, dict):
                self.errors.append(f"Preset '{name}' must be a mapping")
                continue

            kind = preset.get('kind')
            if kind not in PRESET_KINDS:
                self.errors.append(
                    f"Preset '{name}' has unknown kind {kind!r}; expected one of: {', '.join(PRESET_KINDS)}"
                )
                continue

            for field in PRESET_KINDS[kind]:
                if field not in preset:
                    self.errors.append(f"Preset '{name}' of kind '{kind}' needs field '{field}'")
                else:
                    self._validate_rational(preset[field], f"preset '{name}' field '{field}'")

            for field in ('q', 'exclude_y'):
                if field in preset:
                    self._validate_rational(preset[field], f"preset '{name}' field '{field}'")

            if 'description' not in preset:
                self.warnings.append(f"Preset '{name}' has no description")

        is_valid = len(self.errors) == 0
        return is_valid, self.errors, self.warnings
