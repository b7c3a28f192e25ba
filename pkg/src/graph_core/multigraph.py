"""
Multigraphs
Immutable labeled multigraphs with loops, parallel edges and an ordered
terminal list, plus the minor operations used by the Tutte engines
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple

from networkx.utils import UnionFind

from partition_lattice import Partition

from .errors import (
    GraphValidationError,
    InvalidPartitionError,
    LoopContractionError,
    NoSuchEdgeError,
    SharedNonTerminalError,
    TerminalMismatchError,
    TerminalMissingError,
)

logger = logging.getLogger(__name__)

Edge = Tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    """Unordered edge as a sorted label pair"""
    return (u, v) if u <= v else (v, u)


class EdgeClass(Enum):
    LOOP = 'loop'
    BRIDGE = 'bridge'
    ORDINARY = 'ordinary'


@dataclass(frozen=True)
class Multigraph:
    """
    Labeled multigraph

    Vertices are kept sorted, every edge is a sorted label pair and the edge
    multiset is stored as a sorted tuple, so equal graphs compare equal.
    """

    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()
    terminals: Tuple[str, ...] = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        if not vertices:
            raise GraphValidationError("A graph needs at least one vertex")
        if any(not isinstance(v, str) for v in vertices):
            raise GraphValidationError("Vertex labels must be strings")
        if len(set(vertices)) != len(vertices):
            raise GraphValidationError(f"Repeated vertex labels in {vertices}")

        vertex_set = set(vertices)
        edges = []
        for edge in self.edges:
            if len(edge) != 2:
                raise GraphValidationError(f"Edge {edge} must have exactly two endpoints")
            u, v = edge
            if u not in vertex_set or v not in vertex_set:
                raise GraphValidationError(f"Edge {tuple(edge)} has an endpoint outside the vertex set")
            edges.append(edge_key(u, v))

        terminals = tuple(self.terminals)
        if len(set(terminals)) != len(terminals):
            raise GraphValidationError(f"Repeated terminal labels in {terminals}")
        outside = [u for u in terminals if u not in vertex_set]
        if outside:
            raise GraphValidationError(f"Terminals {outside} are not vertices")

        object.__setattr__(self, 'vertices', tuple(sorted(vertices)))
        object.__setattr__(self, 'edges', tuple(sorted(edges)))
        object.__setattr__(self, 'terminals', terminals)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def with_terminals(self, terminals: Sequence[str]) -> 'Multigraph':
        return Multigraph(self.vertices, self.edges, tuple(terminals))

    def spanning_subgraph(self, edge_indices: Iterable[int]) -> 'Multigraph':
        """Spanning subgraph keeping the edges at the given positions"""
        return Multigraph(self.vertices, tuple(self.edges[i] for i in edge_indices), self.terminals)

    def __str__(self) -> str:
        return (
            f"Multigraph(|V|={self.num_vertices}, |E|={self.num_edges}, "
            f"terminals={list(self.terminals)})"
        )


@dataclass(frozen=True)
class SplitInstance:
    """Two parts K and H sharing exactly the terminal vertices"""

    K: Multigraph
    H: Multigraph
    terminals: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'terminals', tuple(self.terminals))

    @property
    def n(self) -> int:
        return len(self.terminals)

    def glued(self) -> Multigraph:
        return glue(self.K, self.H, self.terminals)


# ----------------------------------------------------------------------
# Connectivity


def _union_find(vertices: Iterable[str], edges: Iterable[Edge]) -> UnionFind:
    uf = UnionFind(vertices)
    for u, v in edges:
        uf.union(u, v)
    return uf


def components(G: Multigraph) -> int:
    """Number of connected components; isolated vertices count"""
    uf = _union_find(G.vertices, G.edges)
    return len({uf[v] for v in G.vertices})


def _remove_one(edges: Tuple[Edge, ...], e: Sequence[str]) -> Tuple[Edge, ...]:
    key = edge_key(*e)
    try:
        i = edges.index(key)
    except ValueError:
        raise NoSuchEdgeError(key) from None
    return edges[:i] + edges[i + 1:]


def delete_edge(G: Multigraph, e: Sequence[str]) -> Multigraph:
    """
    Remove one copy of edge e

    Raises:
        NoSuchEdgeError: If e is not an edge of G
    """
    return Multigraph(G.vertices, _remove_one(G.edges, e), G.terminals)


def _relabel(G: Multigraph, mapping: Dict[str, str], edges: Tuple[Edge, ...]) -> Multigraph:
    vertices = sorted({mapping.get(v, v) for v in G.vertices})
    new_edges = tuple(edge_key(mapping.get(u, u), mapping.get(v, v)) for u, v in edges)
    terminals: List[str] = []
    for u in G.terminals:
        label = mapping.get(u, u)
        if label not in terminals:
            terminals.append(label)
    return Multigraph(tuple(vertices), new_edges, tuple(terminals))


def contract_edge(G: Multigraph, e: Sequence[str]) -> Multigraph:
    """
    Contract one copy of a non-loop edge

    The merged vertex keeps the lexicographically smaller label; remaining
    parallel copies of e become loops.

    Raises:
        NoSuchEdgeError: If e is not an edge of G
        LoopContractionError: If e is a loop
    """
    u, v = edge_key(*e)
    if u == v:
        if (u, v) not in G.edges:
            raise NoSuchEdgeError((u, v))
        raise LoopContractionError(f"Refusing to contract loop at {u!r}")
    remaining = _remove_one(G.edges, (u, v))
    return _relabel(G, {v: u}, remaining)


def classify_edge(G: Multigraph, e: Sequence[str]) -> EdgeClass:
    """
    Loop, bridge or ordinary edge

    Raises:
        NoSuchEdgeError: If e is not an edge of G
    """
    u, v = edge_key(*e)
    remaining = _remove_one(G.edges, (u, v))
    if u == v:
        return EdgeClass.LOOP
    uf = _union_find(G.vertices, remaining)
    return EdgeClass.BRIDGE if uf[u] != uf[v] else EdgeClass.ORDINARY


# ----------------------------------------------------------------------
# Terminal operations


def identify(G: Multigraph, partition: Partition) -> Multigraph:
    """
    Collapse each block of a terminal partition to a single vertex

    Each block is represented by its lexicographically smallest label;
    edges inside a block become loops and the result's terminals are the
    block representatives in block order.

    Raises:
        InvalidPartitionError: If the partition is not over G.terminals
    """
    if partition.ground != G.terminals:
        raise InvalidPartitionError(
            f"Partition ground {partition.ground} differs from terminals {G.terminals}"
        )

    mapping = {}
    representatives = []
    for block in partition.blocks:
        rep = min(block)
        representatives.append(rep)
        for label in block:
            mapping[label] = rep

    merged = _relabel(G, mapping, G.edges)
    return merged.with_terminals(representatives)


def glue(K: Multigraph, H: Multigraph, terminals: Sequence[str]) -> Multigraph:
    """
    n-sum of K and H along the shared terminal vertices

    Raises:
        TerminalMismatchError: If the terminal lists of K and H differ from terminals
        SharedNonTerminalError: If K and H share a vertex outside terminals
    """
    terminals = tuple(terminals)
    if K.terminals != terminals or H.terminals != terminals:
        raise TerminalMismatchError(
            f"Terminals of K {K.terminals} and H {H.terminals} must both equal {terminals}"
        )

    shared = set(K.vertices) & set(H.vertices)
    extra = sorted(shared - set(terminals))
    if extra:
        raise SharedNonTerminalError(f"K and H share non-terminal vertices {extra}")

    vertices = tuple(sorted(set(K.vertices) | set(H.vertices)))
    return Multigraph(vertices, K.edges + H.edges, terminals)


def induced_partition(Y: Multigraph, terminals: Sequence[str]) -> Partition:
    """
    Partition of the terminals by connected component of Y

    Raises:
        TerminalMissingError: If a terminal is not a vertex of Y
    """
    terminals = tuple(terminals)
    vertex_set = set(Y.vertices)
    missing = [u for u in terminals if u not in vertex_set]
    if missing:
        raise TerminalMissingError(f"Terminals {missing} are not vertices of the graph")

    uf = _union_find(Y.vertices, Y.edges)
    return Partition.from_labels(terminals, [uf[u] for u in terminals])
