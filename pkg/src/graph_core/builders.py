"""
Graph Builders
Small named graph families and two-part splits used by fixtures, the
verification corpus and the benchmark
"""

import logging
from typing import List, Optional, Sequence

import networkx as nx

from .multigraph import Edge, Multigraph, SplitInstance

logger = logging.getLogger(__name__)


def _labels(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(count)]


def edgeless_graph(count: int, prefix: str = 'v') -> Multigraph:
    return Multigraph(tuple(_labels(prefix, count)))


def path_graph(length: int, prefix: str = 'v', terminals: Sequence[str] = ()) -> Multigraph:
    """Path with `length` edges on vertices prefix0..prefix{length}"""
    vertices = _labels(prefix, length + 1)
    edges = tuple(zip(vertices, vertices[1:]))
    return Multigraph(tuple(vertices), edges, tuple(terminals))


def cycle_graph(length: int, prefix: str = 'v') -> Multigraph:
    """
    Cycle with `length` edges

    length 1 is a loop and length 2 a parallel pair.
    """
    if length < 1:
        raise ValueError("A cycle needs at least one edge")
    vertices = _labels(prefix, length)
    edges = tuple((vertices[i], vertices[(i + 1) % length]) for i in range(length))
    return Multigraph(tuple(vertices), edges)


def complete_graph(count: int, prefix: str = 'v') -> Multigraph:
    vertices = _labels(prefix, count)
    edges = tuple(
        (vertices[i], vertices[j]) for i in range(count) for j in range(i + 1, count)
    )
    return Multigraph(tuple(vertices), edges)


def ladder_graph(rungs: int) -> Multigraph:
    """Ladder with rails a0..a{r-1}, b0..b{r-1} and rungs a_i-b_i"""
    a = _labels('a', rungs)
    b = _labels('b', rungs)
    edges: List[Edge] = [(a[i], b[i]) for i in range(rungs)]
    edges += [(a[i], a[i + 1]) for i in range(rungs - 1)]
    edges += [(b[i], b[i + 1]) for i in range(rungs - 1)]
    return Multigraph(tuple(a + b), tuple(edges))


def bowtie_graph() -> Multigraph:
    """Two triangles sharing the vertex c"""
    return Multigraph(
        ('a', 'b', 'c', 'd', 'e'),
        (('a', 'b'), ('b', 'c'), ('a', 'c'), ('c', 'd'), ('d', 'e'), ('c', 'e')),
    )


def cycle_split(k_length: int = 2, h_length: int = 2) -> SplitInstance:
    """
    Cycle cut at two vertices into two paths

    With the defaults both parts are 2-paths and the glued graph is C4.
    """
    terminals = ('u1', 'u2')

    def part(prefix: str, length: int) -> Multigraph:
        inner = _labels(prefix, length - 1)
        chain = ['u1'] + inner + ['u2']
        return Multigraph(tuple(chain), tuple(zip(chain, chain[1:])), terminals)

    return SplitInstance(part('k', k_length), part('h', h_length), terminals)


def ladder_split(half: int) -> SplitInstance:
    """
    Ladder with 2*half+1 rungs cut at its middle rung

    The middle rung belongs to K; its endpoints are the two terminals.
    """
    middle = half
    terminals = (f"a{middle}", f"b{middle}")

    def rails(indices: Sequence[int]) -> List[Edge]:
        out = []
        for i, j in zip(indices, indices[1:]):
            out.append((f"a{i}", f"a{j}"))
            out.append((f"b{i}", f"b{j}"))
        return out

    left = list(range(0, middle + 1))
    right = list(range(middle, 2 * middle + 1))

    k_edges = [(f"a{i}", f"b{i}") for i in left] + rails(left)
    h_edges = [(f"a{i}", f"b{i}") for i in right[1:]] + rails(right)

    K = Multigraph(tuple(f"{r}{i}" for r in 'ab' for i in left), tuple(k_edges), terminals)
    H = Multigraph(tuple(f"{r}{i}" for r in 'ab' for i in right), tuple(h_edges), terminals)
    return SplitInstance(K, H, terminals)


def random_connected_part(
    vertex_count: int,
    edge_count: int,
    terminals: Sequence[str],
    prefix: str,
    seed: int,
    parallel_edges: int = 0
) -> Multigraph:
    """
    Connected random part whose first vertices are the terminals

    A random labeled spanning tree guarantees connectivity; further simple
    edges are drawn from the complement of the tree, then `parallel_edges`
    existing edges are duplicated.

    Args:
        vertex_count: Total vertex count, terminals included
        edge_count: Target number of simple edges
        terminals: Terminal labels, placed first
        prefix: Label prefix for non-terminal vertices
        seed: Random seed
        parallel_edges: Number of extra copies of existing edges

    Returns:
        Connected multigraph with the given terminals
    """
    terminals = list(terminals)
    if vertex_count < max(1, len(terminals)):
        raise ValueError(f"Part needs at least {len(terminals)} vertices")
    labels = terminals + _labels(prefix, vertex_count - len(terminals))
    rng = nx.utils.create_py_random_state(seed)

    if vertex_count == 1:
        simple = nx.empty_graph(1)
    else:
        simple = nx.random_labeled_tree(vertex_count, seed=seed)
    candidates = sorted(tuple(sorted(e)) for e in nx.complement(simple).edges())
    rng.shuffle(candidates)
    simple.add_edges_from(candidates[:max(0, edge_count - simple.number_of_edges())])

    edges: List[Edge] = [(labels[u], labels[v]) for u, v in sorted(simple.edges())]
    if parallel_edges and edges:
        edges += [edges[rng.randrange(len(edges))] for _ in range(parallel_edges)]
    return Multigraph(tuple(labels), tuple(edges), tuple(terminals))


def dense_block_split(
    block_vertices: int = 9,
    n: int = 3,
    block_edges: Optional[int] = None,
    seed: int = 0
) -> SplitInstance:
    """
    Two random connected blocks sharing n terminals

    Args:
        block_vertices: Vertices per block, terminals included
        n: Number of shared terminals
        block_edges: Simple edges per block; defaults to 2*block_vertices - 2
        seed: Random seed; H uses seed + 1
    """
    terminals = tuple(f"u{i}" for i in range(1, n + 1))
    edges = block_edges if block_edges is not None else 2 * block_vertices - 2
    K = random_connected_part(block_vertices, edges, terminals, 'k', seed)
    H = random_connected_part(block_vertices, edges, terminals, 'h', seed + 1)
    logger.debug(f"Dense block split: {block_vertices} vertices and {edges} edges per block, n={n}")
    return SplitInstance(K, H, terminals)
