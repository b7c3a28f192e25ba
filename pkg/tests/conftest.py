"""
Shared fixtures for the test suite
"""

import json
import shutil
from pathlib import Path

import pytest

from graph_core import Multigraph, SplitInstance, cycle_split, graph_to_dict, split_to_dict

REPO_ROOT = Path(__file__).resolve().parent.parent
CONFIG_DIR = REPO_ROOT / 'config'


@pytest.fixture
def triangle() -> Multigraph:
    return Multigraph(('a', 'b', 'c'), (('a', 'b'), ('b', 'c'), ('a', 'c')))


@pytest.fixture
def c4_split() -> SplitInstance:
    """C4 cut at two opposite vertices into two 2-paths"""
    return cycle_split(2, 2)


@pytest.fixture
def disconnected_split() -> SplitInstance:
    """K has two components, each holding one terminal"""
    terminals = ('u1', 'u2')
    K = Multigraph(('u1', 'u2', 'k0'), (('u1', 'k0'),), terminals)
    H = Multigraph(('u1', 'u2', 'h0'), (('u1', 'h0'), ('h0', 'u2')), terminals)
    return SplitInstance(K, H, terminals)


@pytest.fixture
def four_terminal_split() -> SplitInstance:
    """A 4-star and a 4-cycle glued along the four terminals"""
    terminals = ('u1', 'u2', 'u3', 'u4')
    K = Multigraph(
        ('u1', 'u2', 'u3', 'u4', 'k0'),
        (('k0', 'u1'), ('k0', 'u2'), ('k0', 'u3'), ('k0', 'u4')),
        terminals,
    )
    H = Multigraph(
        ('u1', 'u2', 'u3', 'u4'),
        (('u1', 'u2'), ('u2', 'u3'), ('u3', 'u4'), ('u4', 'u1')),
        terminals,
    )
    return SplitInstance(K, H, terminals)


@pytest.fixture
def config_dir(tmp_path) -> Path:
    """Writable copy of the shipped configuration"""
    target = tmp_path / 'config'
    target.mkdir()
    for name in ('global.yaml', 'presets.yaml'):
        shutil.copy(CONFIG_DIR / name, target / name)
    return target


@pytest.fixture
def split_file(tmp_path, c4_split) -> Path:
    path = tmp_path / 'c4_split.json'
    path.write_text(json.dumps(split_to_dict(c4_split)), encoding='utf-8')
    return path


@pytest.fixture
def disconnected_split_file(tmp_path, disconnected_split) -> Path:
    path = tmp_path / 'disconnected_split.json'
    path.write_text(json.dumps(split_to_dict(disconnected_split)), encoding='utf-8')
    return path


@pytest.fixture
def triangle_file(tmp_path, triangle) -> Path:
    path = tmp_path / 'triangle.json'
    path.write_text(json.dumps(graph_to_dict(triangle)), encoding='utf-8')
    return path
