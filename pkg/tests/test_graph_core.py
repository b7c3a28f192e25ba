import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graph_core import (
    EdgeClass,
    GraphValidationError,
    InvalidPartitionError,
    LoopContractionError,
    Multigraph,
    NoSuchEdgeError,
    SharedNonTerminalError,
    TerminalMismatchError,
    TerminalMissingError,
    bowtie_graph,
    classify_edge,
    components,
    contract_edge,
    cycle_graph,
    cycle_split,
    delete_edge,
    dense_block_split,
    glue,
    identify,
    induced_partition,
    ladder_split,
    random_connected_part,
)
from partition_lattice import Partition


def test_edges_are_normalized_and_sorted():
    G = Multigraph(('b', 'a'), (('b', 'a'), ('a', 'a'), ('a', 'b')))
    assert G.vertices == ('a', 'b')
    assert G.edges == (('a', 'a'), ('a', 'b'), ('a', 'b'))
    assert G == Multigraph(('a', 'b'), (('a', 'b'), ('b', 'a'), ('a', 'a')))


@pytest.mark.parametrize('vertices, edges, terminals', [
    ((), (), ()),
    (('a', 'a'), (), ()),
    (('a',), (('a', 'b'),), ()),
    (('a', 'b'), (('a',),), ()),
    (('a', 'b'), (), ('c',)),
    (('a', 'b'), (), ('a', 'a')),
])
def test_invalid_graphs_are_rejected(vertices, edges, terminals):
    with pytest.raises(GraphValidationError):
        Multigraph(vertices, edges, terminals)


def test_components_count_isolated_vertices():
    G = Multigraph(('a', 'b', 'c', 'd'), (('a', 'b'),))
    assert components(G) == 3


def test_delete_removes_a_single_copy():
    G = Multigraph(('a', 'b'), (('a', 'b'), ('a', 'b')))
    assert delete_edge(G, ('b', 'a')).edges == (('a', 'b'),)
    with pytest.raises(NoSuchEdgeError):
        delete_edge(G, ('a', 'a'))


def test_contract_turns_parallel_copies_into_loops():
    G = Multigraph(('a', 'b', 'c'), (('a', 'b'), ('a', 'b'), ('b', 'c')), ('b', 'c'))
    H = contract_edge(G, ('a', 'b'))
    assert H.vertices == ('a', 'c')
    assert H.edges == (('a', 'a'), ('a', 'c'))
    assert H.terminals == ('a', 'c')


def test_contracting_a_loop_is_refused():
    G = Multigraph(('a',), (('a', 'a'),))
    with pytest.raises(LoopContractionError):
        contract_edge(G, ('a', 'a'))
    with pytest.raises(NoSuchEdgeError):
        contract_edge(Multigraph(('a',)), ('a', 'a'))


def test_classify_edge(triangle):
    G = Multigraph(('a', 'b', 'c', 'd'), (('a', 'a'), ('a', 'b'), ('b', 'c'), ('c', 'a'), ('c', 'd')))
    assert classify_edge(G, ('a', 'a')) is EdgeClass.LOOP
    assert classify_edge(G, ('c', 'd')) is EdgeClass.BRIDGE
    assert classify_edge(G, ('a', 'b')) is EdgeClass.ORDINARY
    doubled = Multigraph(('a', 'b'), (('a', 'b'), ('a', 'b')))
    assert classify_edge(doubled, ('a', 'b')) is EdgeClass.ORDINARY


def test_identify_collapses_blocks():
    G = Multigraph(('u1', 'u2', 'u3', 'v'), (('u1', 'u2'), ('u2', 'v'), ('v', 'u3')), ('u1', 'u2', 'u3'))
    A = Partition.from_blocks(G.terminals, [('u1', 'u2'), ('u3',)])
    merged = identify(G, A)
    assert merged.vertices == ('u1', 'u3', 'v')
    assert merged.edges == (('u1', 'u1'), ('u1', 'v'), ('u3', 'v'))
    assert merged.terminals == ('u1', 'u3')


def test_identify_requires_partition_of_terminals():
    G = Multigraph(('a', 'b'), (), ('a', 'b'))
    with pytest.raises(InvalidPartitionError):
        identify(G, Partition.minimal(('a',)))


def test_glue_checks_terminals_and_shared_vertices():
    terminals = ('u1', 'u2')
    K = Multigraph(('u1', 'u2', 'x'), (('u1', 'x'), ('x', 'u2')), terminals)
    H = Multigraph(('u1', 'u2', 'y'), (('u1', 'y'), ('y', 'u2')), terminals)
    G = glue(K, H, terminals)
    assert G.num_vertices == 4
    assert G.num_edges == 4
    assert G.terminals == terminals
    assert components(G) == 1

    with pytest.raises(SharedNonTerminalError):
        glue(K, Multigraph(('u1', 'u2', 'x'), (), terminals), terminals)
    with pytest.raises(TerminalMismatchError):
        glue(K, H, ('u1',))


def test_induced_partition():
    Y = Multigraph(('u1', 'u2', 'u3', 'v'), (('u1', 'v'), ('v', 'u3')))
    assert induced_partition(Y, ('u1', 'u2', 'u3')).to_text() == '13|2'
    with pytest.raises(TerminalMissingError):
        induced_partition(Y, ('u1', 'w'))


def test_named_families():
    assert cycle_graph(1).edges == (('v0', 'v0'),)
    assert cycle_graph(2).edges == (('v0', 'v1'), ('v0', 'v1'))
    assert components(bowtie_graph()) == 1
    ladder = ladder_split(1)
    assert ladder.terminals == ('a1', 'b1')
    assert ladder.glued().num_edges == 3 * 3 - 2
    c4 = cycle_split()
    assert c4.glued().num_edges == 4
    assert c4.K.terminals == c4.H.terminals == ('u1', 'u2')


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 8),
    st.integers(0, 20),
    st.integers(0, 3),
    st.integers(0, 10 ** 6),
)
def test_random_parts_are_connected_and_deterministic(vertices, edges, parallel, seed):
    terminals = ('u1', 'u2')
    part = random_connected_part(vertices, edges, terminals, 'k', seed, parallel_edges=parallel)
    assert components(part) == 1
    assert part.terminals == terminals
    assert part.num_vertices == vertices
    assert part == random_connected_part(vertices, edges, terminals, 'k', seed, parallel_edges=parallel)


def test_dense_block_split_shares_only_terminals():
    split = dense_block_split(block_vertices=6, n=3, seed=5)
    shared = set(split.K.vertices) & set(split.H.vertices)
    assert shared == {'u1', 'u2', 'u3'}
    assert components(split.glued()) == 1
