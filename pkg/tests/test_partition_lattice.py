import pytest
from hypothesis import given
from hypothesis import strategies as st

from partition_lattice import (
    GroundMismatchError,
    GroundTooLargeError,
    OutOfRangeError,
    Partition,
    bell,
    enumerate_partitions,
    join,
    lattice_for_size,
    meet,
    meet_size_table,
    reference_order_permutation,
    reference_partitions,
    standard_ground,
    stirling2,
)

GROUND = standard_ground(5)

partitions_of_5 = st.lists(st.integers(0, 4), min_size=5, max_size=5).map(
    lambda labels: Partition.from_labels(GROUND, labels)
)


def test_partition_counts_are_bell_numbers():
    assert [len(lattice_for_size(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_canonical_order_puts_coarser_partitions_first():
    lattice = lattice_for_size(4)
    assert lattice.labels() == [
        '1234',
        '123|4', '124|3', '12|34', '134|2', '13|24', '14|23', '1|234',
        '12|3|4', '13|2|4', '1|23|4', '14|2|3', '1|24|3', '1|2|34',
        '1|2|3|4',
    ]
    counts = [p.num_blocks for p in lattice]
    assert counts == sorted(counts)


def test_enumeration_bounds():
    with pytest.raises(GroundTooLargeError):
        enumerate_partitions(standard_ground(7))
    with pytest.raises(GroundTooLargeError):
        enumerate_partitions(standard_ground(4), max_n=3)
    with pytest.raises(ValueError):
        enumerate_partitions(())


def test_index_follows_order():
    lattice = lattice_for_size(3)
    for i, p in enumerate(lattice):
        assert lattice.index(p) == i
        assert lattice[i] == p


def test_meet_is_finest_common_coarsening():
    a = Partition.from_blocks(GROUND[:4], [('1', '2'), ('3',), ('4',)])
    b = Partition.from_blocks(GROUND[:4], [('2', '3'), ('1',), ('4',)])
    assert meet(a, b).to_text() == '123|4'
    assert join(a, b).to_text() == '1|2|3|4'


def test_from_blocks_validation():
    ground = ('a', 'b', 'c')
    with pytest.raises(ValueError):
        Partition.from_blocks(ground, [('a', 'b')])
    with pytest.raises(ValueError):
        Partition.from_blocks(ground, [('a', 'b'), ('b', 'c')])
    with pytest.raises(ValueError):
        Partition.from_blocks(ground, [('a', 'b', 'c'), ('d',)])
    with pytest.raises(ValueError):
        Partition(ground, (1, 0, 0))


def test_mismatched_grounds_are_rejected():
    with pytest.raises(GroundMismatchError):
        meet(Partition.minimal(('a', 'b')), Partition.minimal(('a', 'c')))


def test_blocks_and_json_form():
    p = Partition.from_labels(('u1', 'u2', 'u3'), ['x', 'y', 'x'])
    assert p.blocks == (('u1', 'u3'), ('u2',))
    assert p.to_json() == [['u1', 'u3'], ['u2']]
    assert p.block_of('u3') == ('u1', 'u3')


def test_blocks_follow_ground_order_when_unsorted():
    p = Partition.from_blocks(('c', 'a', 'b'), [('a', 'b'), ('c',)])
    assert p.blocks == (('c',), ('a', 'b'))
    q = Partition.from_blocks(('b', 'c', 'a'), [('a', 'b'), ('c',)])
    assert q.blocks == (('b', 'a'), ('c',))


@given(partitions_of_5, partitions_of_5)
def test_meet_and_join_are_bounds(a, b):
    m = meet(a, b)
    j = join(a, b)
    assert a.refines(m) and b.refines(m)
    assert j.refines(a) and j.refines(b)
    assert meet(a, b) == meet(b, a)
    assert join(a, b) == join(b, a)


@given(partitions_of_5, partitions_of_5, partitions_of_5)
def test_meet_is_associative(a, b, c):
    assert meet(meet(a, b), c) == meet(a, meet(b, c))


@given(partitions_of_5)
def test_extremes(a):
    minimal = Partition.minimal(GROUND)
    discrete = Partition.discrete(GROUND)
    assert meet(a, minimal) == minimal
    assert meet(a, discrete) == a
    assert join(a, discrete) == discrete


def test_meet_size_table_is_symmetric():
    table = meet_size_table(4)
    assert all(table[i][j] == table[j][i] for i in range(15) for j in range(15))
    assert table[0] == (1,) * 15
    assert table[14][14] == 4


@pytest.mark.parametrize('n, k, expected', [
    (0, 0, 1),
    (3, 0, 0),
    (4, 2, 7),
    (5, 3, 25),
    (8, 4, 1701),
])
def test_stirling2(n, k, expected):
    assert stirling2(n, k) == expected


def test_combinatorics_range():
    assert bell(8) == 4140
    with pytest.raises(OutOfRangeError):
        stirling2(9, 2)
    with pytest.raises(OutOfRangeError):
        stirling2(3, 4)


def test_reference_order_permutation():
    assert reference_order_permutation(4) == (0, 1, 2, 4, 7, 3, 6, 5, 8, 9, 11, 12, 10, 13, 14)
    assert len(set(reference_partitions(4))) == 15
    with pytest.raises(ValueError):
        reference_order_permutation(3)
