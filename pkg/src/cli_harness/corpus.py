"""
Random Corpus
Seed-deterministic glued graphs with connected parts for the verification suites
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Mapping, Tuple

import networkx as nx

from graph_core import SplitInstance, random_connected_part

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusSettings:
    """Size bounds per part; terminals are counted among the vertices"""

    terminal_counts: Tuple[int, ...] = (2, 3, 4)
    max_vertices: int = 8
    max_edges: int = 12
    parallel_edge_rate: float = 0.2

    @classmethod
    def from_settings(cls, settings: Mapping[str, Any]) -> 'CorpusSettings':
        corpus = settings.get('corpus', {})
        defaults = cls()
        return cls(
            terminal_counts=tuple(int(n) for n in corpus.get('terminal_counts', defaults.terminal_counts)),
            max_vertices=int(corpus.get('max_vertices', defaults.max_vertices)),
            max_edges=int(corpus.get('max_edges', defaults.max_edges)),
            parallel_edge_rate=float(corpus.get('parallel_edge_rate', defaults.parallel_edge_rate)),
        )


def _random_part(rng, n: int, terminals: Tuple[str, ...], prefix: str, bounds: CorpusSettings):
    vertex_count = rng.randint(max(n, 2), max(bounds.max_vertices, n, 2))
    simple_cap = min(bounds.max_edges, vertex_count * (vertex_count - 1) // 2)
    tree_edges = vertex_count - 1
    if simple_cap < tree_edges:
        raise ValueError(
            f"Corpus bounds allow {bounds.max_edges} edges, a connected part on {vertex_count} vertices needs {tree_edges}"
        )
    simple = rng.randint(tree_edges, simple_cap)
    parallel = sum(1 for _ in range(simple) if rng.random() < bounds.parallel_edge_rate)
    parallel = min(parallel, bounds.max_edges - simple)
    return random_connected_part(
        vertex_count, simple, terminals, prefix, seed=rng.randrange(2 ** 31), parallel_edges=parallel
    )


def generate_corpus(seed: int, count: int, bounds: CorpusSettings = CorpusSettings()) -> List[SplitInstance]:
    """
    Random glued graphs K ⊕ H with connected parts

    Each instance draws its terminal count from bounds.terminal_counts;
    each part gets a random spanning tree over its vertices plus random
    simple and parallel edges within the bounds. The same seed always
    yields the same corpus.

    Args:
        seed: Corpus seed
        count: Number of instances
        bounds: Size bounds per part

    Returns:
        Split instances in generation order
    """
    rng = nx.utils.create_py_random_state(seed)
    instances = []
    for _ in range(count):
        n = rng.choice(bounds.terminal_counts)
        terminals = tuple(f"u{i}" for i in range(1, n + 1))
        K = _random_part(rng, n, terminals, 'k', bounds)
        H = _random_part(rng, n, terminals, 'h', bounds)
        instances.append(SplitInstance(K, H, terminals))
    logger.info(f"Generated corpus of {count} instances from seed {seed}")
    return instances
