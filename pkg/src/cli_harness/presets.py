"""
Specialization Presets
Resolves a preset name such as "ising", "reliability" or "potts:3" to an
exact evaluation point. Only the (x, y) constraint is applied; the
prefactors relating each specialization to T(G; x, y) are not.
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Tuple

from exact_algebra import parse_rational

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, Fraction]


def parse_preset_spec(spec: str) -> Tuple[str, Optional[Fraction]]:
    """
    Split "name" or "name:q" into the preset name and its parameter

    Raises:
        RationalParseError: If the parameter is not a rational
    """
    name, sep, param = spec.partition(':')
    name = name.strip()
    if not sep:
        return name, None
    return name, parse_rational(param)


def _fixed(preset: Mapping[str, Any], field: str) -> Fraction:
    return parse_rational(str(preset[field]))


def _require(value: Optional[Fraction], coordinate: str, name: str) -> Fraction:
    if value is None:
        raise ValueError(f"Preset '{name}' needs --{coordinate}")
    return value


def _agree(given: Optional[Fraction], fixed: Fraction, coordinate: str, name: str) -> Fraction:
    if given is not None and given != fixed:
        raise ValueError(f"Preset '{name}' fixes {coordinate} = {fixed}, but --{coordinate} {given} was given")
    return fixed


def resolve_preset(
    spec: str,
    presets: Mapping[str, Dict[str, Any]],
    x: Optional[Fraction] = None,
    y: Optional[Fraction] = None
) -> Point:
    """
    Resolve a preset to an exact point

    Args:
        spec: Preset name, optionally with a ":q" parameter
        presets: Preset definitions from config/presets.yaml
        x: x from the command line, if any
        y: y from the command line, if any

    Returns:
        (x, y)

    Raises:
        ValueError: If the preset is unknown, a needed coordinate is
            missing, a given coordinate conflicts with the preset, or the
            point falls on an excluded value
    """
    name, param = parse_preset_spec(spec)
    if name not in presets:
        raise ValueError(f"Unknown preset '{name}'; available: {', '.join(sorted(presets))}")
    preset = presets[name]
    kind = preset['kind']

    if param is not None and kind != 'hyperbola':
        raise ValueError(f"Preset '{name}' takes no parameter")

    if kind == 'point':
        point = (_agree(x, _fixed(preset, 'x'), 'x', name), _agree(y, _fixed(preset, 'y'), 'y', name))
    elif kind == 'x_fixed':
        point = (_agree(x, _fixed(preset, 'x'), 'x', name), _require(y, 'y', name))
    elif kind == 'y_fixed':
        point = (_require(x, 'x', name), _agree(y, _fixed(preset, 'y'), 'y', name))
    elif kind == 'product':
        x = _require(x, 'x', name)
        if x == 0:
            raise ValueError(f"Preset '{name}' fixes x*y; x must be nonzero")
        point = (x, _agree(y, _fixed(preset, 'value') / x, 'y', name))
    elif kind == 'hyperbola':
        q = param if param is not None else (_fixed(preset, 'q') if 'q' in preset else None)
        if q is None:
            raise ValueError(f"Preset '{name}' needs a parameter, as in '{name}:q'")
        x = _require(x, 'x', name)
        if x == 1:
            raise ValueError(f"Preset '{name}' fixes (x-1)(y-1) = {q}; x must differ from 1")
        point = (x, _agree(y, 1 + q / (x - 1), 'y', name))
    elif kind == 'free':
        point = (_require(x, 'x', name), _require(y, 'y', name))
    else:
        raise ValueError(f"Preset '{name}' has unknown kind '{kind}'")

    if 'exclude_y' in preset and point[1] == _fixed(preset, 'exclude_y'):
        raise ValueError(f"Preset '{name}' excludes y = {preset['exclude_y']}")

    logger.info(f"Preset '{spec}' resolved to ({point[0]}, {point[1]})")
    return point
