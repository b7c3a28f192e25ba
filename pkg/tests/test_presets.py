from fractions import Fraction

import pytest

from cli_harness import parse_preset_spec, resolve_preset
from config_manager import ConfigManager
from exact_algebra import RationalParseError


@pytest.fixture
def presets(config_dir):
    return ConfigManager(str(config_dir)).get_presets()


def test_parse_preset_spec():
    assert parse_preset_spec('ising') == ('ising', None)
    assert parse_preset_spec('potts:3/2') == ('potts', Fraction(3, 2))
    with pytest.raises(RationalParseError):
        parse_preset_spec('potts:q')


@pytest.mark.parametrize('spec, x, y, expected', [
    ('spanning-trees', None, None, (1, 1)),
    ('spanning-forests', None, None, (2, 1)),
    ('spanning-trees', Fraction(1), None, (1, 1)),
    ('ising', Fraction(3), None, (3, 2)),
    ('ising:3', Fraction(4), None, (4, 2)),
    ('potts:3', Fraction(4), None, (4, 2)),
    ('potts:2', Fraction(-1), None, (-1, 0)),
    ('jones', Fraction(2), None, (2, Fraction(1, 2))),
    ('chromatic', Fraction(3), None, (3, 0)),
    ('flow', None, Fraction(5), (0, 5)),
    ('reliability', None, Fraction(2), (1, 2)),
    ('random-cluster', Fraction(2), Fraction(3), (2, 3)),
])
def test_resolve_preset(presets, spec, x, y, expected):
    assert resolve_preset(spec, presets, x, y) == expected


@pytest.mark.parametrize('spec, x, y, fragment', [
    ('tutte', None, None, 'Unknown preset'),
    ('potts', Fraction(2), None, 'needs a parameter'),
    ('potts:2', Fraction(1), None, 'differ from 1'),
    ('ising', None, None, 'needs --x'),
    ('chromatic', None, None, 'needs --x'),
    ('chromatic:2', Fraction(3), None, 'takes no parameter'),
    ('spanning-trees', Fraction(2), None, 'fixes x'),
    ('ising', Fraction(3), Fraction(5), 'fixes y'),
    ('jones', Fraction(0), None, 'nonzero'),
    ('reliability', None, Fraction(1), 'excludes y'),
    ('random-cluster', Fraction(3), Fraction(1), 'excludes y'),
    ('random-cluster', Fraction(3), None, 'needs --y'),
])
def test_resolve_preset_errors(presets, spec, x, y, fragment):
    with pytest.raises(ValueError, match=fragment):
        resolve_preset(spec, presets, x, y)
