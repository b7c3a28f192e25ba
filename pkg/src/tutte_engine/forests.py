"""
Spanning Forests
Forest counts by number of trees and the matrix-tree spanning tree count
"""

import logging
from dataclasses import dataclass
from typing import Tuple

from exact_algebra import MultiPoly, RatMatrix, mat_det
from graph_core import Multigraph, components

from .errors import DisconnectedGraphError
from .subgraphs import MAX_ORACLE_EDGES, subgraph_profile
from .tutte import X

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ForestCounts:
    """S[i-1] is the number of spanning forests with exactly i trees"""

    S: Tuple[int, ...]

    def count(self, trees: int) -> int:
        if 1 <= trees <= len(self.S):
            return self.S[trees - 1]
        return 0

    def generating_polynomial(self) -> MultiPoly:
        """Sum of S_i (x-1)^i"""
        result = MultiPoly()
        for i, s in enumerate(self.S, start=1):
            if s:
                result = result + s * (X - 1) ** i
        return result

    def in_variable(self, name: str) -> MultiPoly:
        """Sum of S_i v^i for a fresh variable v"""
        result = MultiPoly()
        for i, s in enumerate(self.S, start=1):
            if s:
                result = result + MultiPoly.monomial(s, **{name: i})
        return result


def forest_counts(G: Multigraph, max_edges: int = MAX_ORACLE_EDGES) -> ForestCounts:
    """
    Spanning forest counts S_1..S_|V|; isolated vertices are trees

    Raises:
        TooLargeError: If |E(G)| > max_edges
    """
    S = [0] * G.num_vertices
    for (omega, k, _), count in subgraph_profile(G, terminals=(), max_edges=max_edges).items():
        if omega + k == G.num_vertices:
            S[omega - 1] += count
    return ForestCounts(tuple(S))


def kirchhoff_count(G: Multigraph) -> int:
    """
    Number of spanning trees by the matrix-tree theorem

    Loops are ignored and parallel edges counted with multiplicity; the
    count is the determinant of the Laplacian with the first vertex's row
    and column removed, computed exactly.

    Raises:
        DisconnectedGraphError: If G is not connected
    """
    if components(G) != 1:
        raise DisconnectedGraphError(f"Spanning trees need a connected graph: {G}")
    if G.num_vertices == 1:
        return 1

    index = {v: i for i, v in enumerate(G.vertices)}
    m = G.num_vertices
    laplacian = [[0] * m for _ in range(m)]
    for u, v in G.edges:
        if u == v:
            continue
        i, j = index[u], index[v]
        laplacian[i][i] += 1
        laplacian[j][j] += 1
        laplacian[i][j] -= 1
        laplacian[j][i] -= 1

    reduced = RatMatrix([row[1:] for row in laplacian[1:]])
    det = mat_det(reduced)
    logger.debug(f"Matrix-tree count of {G}: {det}")
    return int(det)
