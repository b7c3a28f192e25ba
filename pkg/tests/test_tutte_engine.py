from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact_algebra import MultiPoly
from graph_core import (
    Multigraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    random_connected_part,
)
from partition_lattice import enumerate_partitions
from tutte_engine import (
    DisconnectedGraphError,
    EdgeOrder,
    NegamiMode,
    TooLargeError,
    aux_T,
    aux_f,
    forest_counts,
    kirchhoff_count,
    negami,
    negami_tutte_check,
    negami_tutte_relation,
    subgraph_profile,
    tutte_at,
    tutte_dc,
    tutte_oracle,
    tutte_value,
)

X = MultiPoly.variable('x')
Y = MultiPoly.variable('y')
T = MultiPoly.variable('t')

small_parts = st.builds(
    lambda vertices, extra, parallel, seed: random_connected_part(
        vertices, vertices - 1 + extra, ('u1',), 'v', seed, parallel_edges=parallel
    ),
    st.integers(1, 6),
    st.integers(0, 4),
    st.integers(0, 2),
    st.integers(0, 10 ** 6),
)


@pytest.mark.parametrize('graph, expected', [
    (edgeless_graph(3), MultiPoly.constant(1)),
    (Multigraph(('a',), (('a', 'a'),)), Y),
    (path_graph(1), X),
    (cycle_graph(2), X + Y),
    (cycle_graph(3), X ** 2 + X + Y),
    (cycle_graph(4), X ** 3 + X ** 2 + X + Y),
    (complete_graph(4), X ** 3 + 3 * X ** 2 + 2 * X + 4 * X * Y + 2 * Y + 3 * Y ** 2 + Y ** 3),
])
def test_known_tutte_polynomials(graph, expected):
    assert tutte_dc(graph) == expected
    assert tutte_oracle(graph) == expected


def test_triangle_text_form(triangle):
    assert tutte_dc(triangle).to_text() == 'x^2 + x + y'


def test_point_evaluation_agrees_with_polynomial(triangle):
    assert tutte_at(triangle, 2, 3) == 4 + 2 + 3
    assert tutte_value(triangle, Fraction(1, 2), -1) == tutte_at(triangle, Fraction(1, 2), -1)
    assert tutte_value(edgeless_graph(2), 5, 5) == 1


def test_oracle_enforces_edge_cap():
    with pytest.raises(TooLargeError) as excinfo:
        tutte_oracle(complete_graph(5), max_edges=9)
    assert excinfo.value.edges == 10


def test_subgraph_profile_counts_every_subset(triangle):
    profile = subgraph_profile(triangle, terminals=('a', 'b'))
    assert sum(profile.values()) == 2 ** 3
    # no a-b edge and not both a-c and b-c
    separated = sum(c for (_, _, rgs), c in profile.items() if rgs == (0, 1))
    assert separated == 3


def test_negami_of_triangle(triangle):
    f = negami(triangle)
    assert f.to_text() == 't*x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3'
    assert negami(triangle, mode=NegamiMode.EXPANSION) == f


def test_negami_base_cases():
    assert negami(edgeless_graph(3)) == T ** 3
    loop = Multigraph(('a',), (('a', 'a'),))
    assert negami(loop) == T * (X + Y)


def test_negami_tutte_relation_on_disconnected_graph():
    G = Multigraph(('a', 'b', 'c', 'd'), (('a', 'b'), ('a', 'b'), ('c', 'c')))
    lhs, rhs = negami_tutte_relation(G)
    assert lhs == rhs
    assert negami_tutte_check(G)


def test_forest_counts_and_kirchhoff(triangle):
    counts = forest_counts(triangle)
    assert counts.S == (3, 3, 1)
    assert counts.count(2) == 3
    assert counts.count(5) == 0
    assert kirchhoff_count(triangle) == 3
    assert kirchhoff_count(complete_graph(4)) == 16
    assert kirchhoff_count(Multigraph(('a', 'b'), (('a', 'b'), ('a', 'b'), ('a', 'a')))) == 2
    assert kirchhoff_count(edgeless_graph(1)) == 1


def test_kirchhoff_requires_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        kirchhoff_count(edgeless_graph(2))


def test_auxiliary_polynomials_of_a_two_path(c4_split):
    K = c4_split.K
    minimal, discrete = enumerate_partitions(K.terminals)
    assert aux_T(K, minimal) == 1
    assert aux_T(K, discrete) == X + 1
    assert aux_f(K, minimal) == X ** 2
    assert aux_f(K, discrete) == T * Y ** 2 + 2 * X * Y


def test_auxiliary_polynomials_partition_the_negami_polynomial(four_terminal_split):
    K = four_terminal_split.K
    total = MultiPoly()
    for A in enumerate_partitions(K.terminals):
        total = total + T ** A.num_blocks * aux_f(K, A)
    assert total == negami(K)


@settings(max_examples=30, deadline=None)
@given(small_parts)
def test_deletion_contraction_matches_subset_expansion(G):
    assert tutte_dc(G) == tutte_oracle(G)


@settings(max_examples=30, deadline=None)
@given(small_parts)
def test_negami_recurrence_matches_expansion(G):
    recurrence = negami(G, order=EdgeOrder.FIRST)
    assert recurrence == negami(G, order=EdgeOrder.LAST)
    assert recurrence == negami(G, mode=NegamiMode.EXPANSION)
    assert negami_tutte_check(G)


@settings(max_examples=30, deadline=None)
@given(small_parts)
def test_classical_evaluations(G):
    assert tutte_value(G, 1, 1) == kirchhoff_count(G)
    assert tutte_value(G, 2, 2) == 2 ** G.num_edges
    assert tutte_value(G, 2, 1) == sum(forest_counts(G).S)
