"""
Spanning Subgraph Profiles
Counts spanning subgraphs by (components, edge count, terminal partition).
Every subset-sum polynomial in this package is read off this profile.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from graph_core import Multigraph

from .errors import TooLargeError

logger = logging.getLogger(__name__)

MAX_ORACLE_EDGES = 20

ProfileKey = Tuple[int, int, Tuple[int, ...]]


def _canonical(labels: Sequence[int]) -> Tuple[int, ...]:
    seen: Dict[int, int] = {}
    return tuple(seen.setdefault(b, len(seen)) for b in labels)


def _merge(state: Tuple[int, ...], i: int, j: int) -> Tuple[int, ...]:
    a, b = state[i], state[j]
    if a == b:
        return state
    return _canonical([a if c == b else c for c in state])


@lru_cache(maxsize=256)
def _profile(G: Multigraph, terminals: Tuple[str, ...]) -> Dict[ProfileKey, int]:
    index = {v: i for i, v in enumerate(G.vertices)}

    # state: component labels of all vertices (restricted growth), plus edge count
    states: Counter = Counter({(tuple(range(G.num_vertices)), 0): 1})
    for u, v in G.edges:
        i, j = index[u], index[v]
        following: Counter = Counter()
        for (state, k), count in states.items():
            following[(state, k)] += count
            following[(_merge(state, i, j), k + 1)] += count
        states = following

    terminal_positions = [index[u] for u in terminals]
    profile: Counter = Counter()
    for (state, k), count in states.items():
        omega = max(state) + 1
        rgs = _canonical([state[p] for p in terminal_positions])
        profile[(omega, k, rgs)] += count

    logger.debug(
        f"Subgraph profile of {G}: {len(states)} component states, {len(profile)} classes"
    )
    return dict(profile)


def subgraph_profile(
    G: Multigraph,
    terminals: Optional[Sequence[str]] = None,
    max_edges: int = MAX_ORACLE_EDGES
) -> Dict[ProfileKey, int]:
    """
    Number of spanning subgraphs per (ω(A), |E(A)|, terminal partition)

    Subsets are swept edge by edge while tracking the component partition
    of the vertex set, so the cost depends on the number of reachable
    component states rather than on 2^|E| directly.

    Args:
        G: Graph whose spanning subgraphs are counted
        terminals: Terminals whose induced partition is recorded; defaults to G.terminals
        max_edges: Largest accepted edge count

    Returns:
        Mapping (components, edge count, terminal restricted-growth string) -> count

    Raises:
        TooLargeError: If |E(G)| > max_edges
    """
    if G.num_edges > max_edges:
        raise TooLargeError(G.num_edges, max_edges)
    terminals = tuple(G.terminals if terminals is None else terminals)
    return _profile(G, terminals)
