import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graph_core import Multigraph, SplitInstance, random_connected_part
from partition_lattice import enumerate_partitions
from tutte_engine import (
    DisconnectedGraphError,
    aux_limit_lemma_check,
    contraction_negami_identity_check,
    contraction_tutte_identity_check,
    forest_identity_check,
    glue_negami_identity_check,
    glue_tutte_identity_check,
    limit_lemma_check,
    one_point_join_check,
)


@st.composite
def small_splits(draw):
    n = draw(st.integers(1, 3))
    terminals = tuple(f"u{i}" for i in range(1, n + 1))

    def part(prefix):
        vertices = draw(st.integers(max(n, 2), 5))
        extra = draw(st.integers(0, 3))
        seed = draw(st.integers(0, 10 ** 6))
        return random_connected_part(vertices, vertices - 1 + extra, terminals, prefix, seed)

    return SplitInstance(part('k'), part('h'), terminals)


def test_identities_on_the_four_cycle(c4_split):
    assert glue_negami_identity_check(c4_split)
    assert glue_tutte_identity_check(c4_split)
    assert contraction_negami_identity_check(c4_split.K)
    assert contraction_tutte_identity_check(c4_split.K)
    assert limit_lemma_check(c4_split.glued())
    assert forest_identity_check(c4_split.glued())


def test_identities_with_four_terminals(four_terminal_split):
    split = four_terminal_split
    assert glue_negami_identity_check(split)
    assert glue_tutte_identity_check(split)
    assert contraction_tutte_identity_check(split.H)
    for A in enumerate_partitions(split.terminals):
        assert aux_limit_lemma_check(split.K, A)


def test_forest_identities_hold_on_disconnected_graphs():
    G = Multigraph(('a', 'b', 'c', 'd'), (('a', 'b'), ('c', 'd'), ('c', 'd'), ('d', 'd')))
    assert forest_identity_check(G)
    assert limit_lemma_check(G)


def test_y_one_identities_require_connected_parts(disconnected_split):
    with pytest.raises(DisconnectedGraphError):
        glue_tutte_identity_check(disconnected_split)
    with pytest.raises(DisconnectedGraphError):
        contraction_tutte_identity_check(disconnected_split.K)
    assert glue_negami_identity_check(disconnected_split)


def test_one_point_join(triangle):
    K = triangle.with_terminals(('a',))
    H = Multigraph(('a', 'x', 'y'), (('a', 'x'), ('x', 'y'), ('x', 'y')), ('a',))
    assert one_point_join_check(K, H)
    with pytest.raises(ValueError):
        one_point_join_check(triangle.with_terminals(('a', 'b')), H)


@settings(max_examples=25, deadline=None)
@given(small_splits())
def test_gluing_identities(split):
    assert glue_negami_identity_check(split)
    assert glue_tutte_identity_check(split)


@settings(max_examples=25, deadline=None)
@given(small_splits())
def test_contraction_identities(split):
    assert contraction_negami_identity_check(split.K)
    assert contraction_tutte_identity_check(split.K)
    for A in enumerate_partitions(split.terminals):
        assert aux_limit_lemma_check(split.K, A)
