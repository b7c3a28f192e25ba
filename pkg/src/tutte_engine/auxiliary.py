"""
Auxiliary Polynomials
Subgraph sums of a part K restricted to the spanning subgraphs whose
components induce a given partition of the terminals
"""

import logging
from collections import Counter

from exact_algebra import MultiPoly
from graph_core import InvalidPartitionError, Multigraph
from partition_lattice import Partition

from .subgraphs import MAX_ORACLE_EDGES, subgraph_profile
from .tutte import X

logger = logging.getLogger(__name__)


def _check_ground(K: Multigraph, A: Partition) -> None:
    if not K.terminals:
        raise InvalidPartitionError("Auxiliary polynomials need at least one terminal")
    if A.ground != K.terminals:
        raise InvalidPartitionError(
            f"Partition ground {A.ground} differs from terminals {K.terminals}"
        )


def aux_f(K: Multigraph, A: Partition, max_edges: int = MAX_ORACLE_EDGES) -> MultiPoly:
    """
    Negami auxiliary polynomial of K at terminal partition A

    Sum over spanning subgraphs Y with P(Y) = A of
    t^(ω(Y)-|A|) x^|E(Y)| y^(|E(K)|-|E(Y)|).

    Raises:
        InvalidPartitionError: If A is not a partition of K.terminals
        TooLargeError: If |E(K)| > max_edges
    """
    _check_ground(K, A)
    grouped: Counter = Counter()
    for (omega, k, rgs), count in subgraph_profile(K, max_edges=max_edges).items():
        if rgs == A.rgs:
            grouped[(omega - A.num_blocks, k, K.num_edges - k)] += count
    return MultiPoly(('t', 'x', 'y'), grouped)


def aux_T(K: Multigraph, A: Partition, max_edges: int = MAX_ORACLE_EDGES) -> MultiPoly:
    """
    Tutte auxiliary polynomial of K at terminal partition A, taken at y = 1

    Only spanning forests survive y = 1, so this is the sum over spanning
    forests Y with P(Y) = A of (x-1)^(ω(Y)-|A|), expanded in x.

    Raises:
        InvalidPartitionError: If A is not a partition of K.terminals
        TooLargeError: If |E(K)| > max_edges
    """
    _check_ground(K, A)
    grouped: Counter = Counter()
    for (omega, k, rgs), count in subgraph_profile(K, max_edges=max_edges).items():
        if rgs == A.rgs and omega + k == K.num_vertices:
            grouped[omega - A.num_blocks] += count

    result = MultiPoly()
    for exponent, count in grouped.items():
        result = result + count * (X - 1) ** exponent
    return result
