"""
Polynomial Identities
Symbolic checks tying the Negami, Tutte, auxiliary and forest polynomials
together. Each check returns True on exact equality and logs the failing
case otherwise.
"""

import logging

from exact_algebra import MultiPoly
from graph_core import Multigraph, SplitInstance, components, glue, identify
from partition_lattice import Partition, enumerate_partitions, meet

from .auxiliary import aux_T, aux_f
from .errors import DisconnectedGraphError
from .forests import forest_counts
from .negami import T, negami
from .subgraphs import MAX_ORACLE_EDGES
from .tutte import X, tutte_dc

logger = logging.getLogger(__name__)

S = MultiPoly.variable('s')
ZETA = MultiPoly.variable('zeta')


def _report(name: str, ok: bool, subject) -> bool:
    if ok:
        logger.debug(f"{name} holds for {subject}")
    else:
        logger.error(f"{name} fails for {subject}")
    return ok


def limit_lemma_check(G: Multigraph, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """
    Forest counts as a coefficient of the Negami polynomial

    After t := s·ζ, x := ζ, y := 1 the coefficient of ζ^|V(G)| must equal
    the sum of S_i s^i.
    """
    substituted = negami(G).compose({'t': S * ZETA, 'x': ZETA, 'y': 1})
    extracted = substituted.coefficient('zeta', G.num_vertices)
    expected = forest_counts(G, max_edges=max_edges).in_variable('s')
    return _report("Forest limit identity", extracted == expected, G)


def aux_limit_lemma_check(K: Multigraph, A: Partition, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """
    aux_T as a coefficient of aux_f

    After t := s·ζ, x := ζ, y := 1 the coefficient of ζ^(|V(K)|-|A|) of
    aux_f(K, A) must equal aux_T(K, A) at x = s + 1.
    """
    substituted = aux_f(K, A, max_edges=max_edges).compose({'t': S * ZETA, 'x': ZETA, 'y': 1})
    extracted = substituted.coefficient('zeta', K.num_vertices - A.num_blocks)
    expected = aux_T(K, A, max_edges=max_edges).compose({'x': S + 1})
    return _report(f"Auxiliary limit identity at {A}", extracted == expected, K)


def forest_identity_check(G: Multigraph, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """Sum of S_i (x-1)^i equals (x-1)^ω(G) T(G; x, 1)"""
    lhs = forest_counts(G, max_edges=max_edges).generating_polynomial()
    rhs = (X - 1) ** components(G) * tutte_dc(G).substitute('y', 1)
    return _report("Forest generating identity", lhs == rhs, G)


def glue_negami_identity_check(split: SplitInstance, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """f(K ⊕ H) equals the sum over A of aux_f(K, A) f(H/A)"""
    lattice = enumerate_partitions(split.terminals)
    total = MultiPoly()
    for A in lattice:
        total = total + aux_f(split.K, A, max_edges=max_edges) * negami(identify(split.H, A))
    return _report("Glued Negami identity", total == negami(split.glued()), split.glued())


def contraction_negami_identity_check(K: Multigraph, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """f(K/A) equals the sum over B of t^|A∧B| aux_f(K, B), for every A"""
    lattice = enumerate_partitions(K.terminals)
    aux = {B: aux_f(K, B, max_edges=max_edges) for B in lattice}
    ok = True
    for A in lattice:
        total = MultiPoly()
        for B in lattice:
            total = total + T ** meet(A, B).num_blocks * aux[B]
        ok = _report(f"Contraction Negami identity at {A}", total == negami(identify(K, A)), K) and ok
    return ok


def _require_connected(*graphs: Multigraph) -> None:
    for G in graphs:
        if components(G) != 1:
            raise DisconnectedGraphError(f"y = 1 identities need connected parts: {G}")


def glue_tutte_identity_check(split: SplitInstance, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """
    T(K ⊕ H; x, 1) equals the sum over A of aux_T(K, A) T(H/A; x, 1)

    Raises:
        DisconnectedGraphError: If K or H is disconnected
    """
    _require_connected(split.K, split.H)
    lattice = enumerate_partitions(split.terminals)
    total = MultiPoly()
    for A in lattice:
        contracted = tutte_dc(identify(split.H, A)).substitute('y', 1)
        total = total + aux_T(split.K, A, max_edges=max_edges) * contracted
    expected = tutte_dc(split.glued()).substitute('y', 1)
    return _report("Glued Tutte identity at y = 1", total == expected, split.glued())


def contraction_tutte_identity_check(K: Multigraph, max_edges: int = MAX_ORACLE_EDGES) -> bool:
    """
    T(K/A; x, 1) equals the sum over B with |A∧B| + n = |A| + |B| of
    (x-1)^(|A∧B|-1) aux_T(K, B), for every A

    Raises:
        DisconnectedGraphError: If K is disconnected
    """
    _require_connected(K)
    lattice = enumerate_partitions(K.terminals)
    n = lattice.n
    aux = {B: aux_T(K, B, max_edges=max_edges) for B in lattice}
    ok = True
    for A in lattice:
        total = MultiPoly()
        for B in lattice:
            common = meet(A, B).num_blocks
            if common + n - A.num_blocks - B.num_blocks == 0:
                total = total + (X - 1) ** (common - 1) * aux[B]
        expected = tutte_dc(identify(K, A)).substitute('y', 1)
        ok = _report(f"Contraction Tutte identity at {A}", total == expected, K) and ok
    return ok


def one_point_join_check(K: Multigraph, H: Multigraph) -> bool:
    """
    Tutte multiplicativity over a one-vertex gluing

    Raises:
        ValueError: If K does not have exactly one terminal
    """
    if len(K.terminals) != 1:
        raise ValueError("One-point joins glue along exactly one terminal")
    joined = glue(K, H, K.terminals)
    return _report("One-point multiplicativity", tutte_dc(joined) == tutte_dc(K) * tutte_dc(H), joined)
