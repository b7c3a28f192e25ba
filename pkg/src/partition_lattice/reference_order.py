"""
Reference ordering of the 15 partitions of a 4-set
The published n=4 matrices list partitions in this order; conjugating a
canonical matrix by the permutation below lines it up with them.
"""

from typing import Tuple

from .lattice import lattice_for_size, standard_ground
from .partition import Partition

# The fourteenth entry of the published listing repeats an
# element ("{2,4},{1},{2}"); it is read as {3,4},{1},{2}, the only
# 2+1+1 partition otherwise missing.
REFERENCE_ORDER_4 = (
    (('1', '2', '3', '4'),),
    (('1', '2', '3'), ('4',)),
    (('1', '2', '4'), ('3',)),
    (('1', '3', '4'), ('2',)),
    (('2', '3', '4'), ('1',)),
    (('1', '2'), ('3', '4')),
    (('1', '4'), ('2', '3')),
    (('1', '3'), ('2', '4')),
    (('1', '2'), ('3',), ('4',)),
    (('1', '3'), ('2',), ('4',)),
    (('1', '4'), ('2',), ('3',)),
    (('2', '4'), ('1',), ('3',)),
    (('2', '3'), ('1',), ('4',)),
    (('3', '4'), ('1',), ('2',)),
    (('1',), ('2',), ('3',), ('4',)),
)


def reference_partitions(n: int = 4) -> Tuple[Partition, ...]:
    if n != 4:
        raise ValueError(f"A reference ordering exists only for n=4, got n={n}")
    ground = standard_ground(4)
    return tuple(Partition.from_blocks(ground, blocks) for blocks in REFERENCE_ORDER_4)


def reference_order_permutation(n: int = 4) -> Tuple[int, ...]:
    """
    perm[i] = canonical index of the i-th partition in the reference listing

    Raises:
        ValueError: If n != 4, or the listing is not a bijection
    """
    lattice = lattice_for_size(n)
    perm = tuple(lattice.index(p) for p in reference_partitions(n))
    if sorted(perm) != list(range(len(lattice))):
        raise ValueError("Reference listing is not a permutation of the partition lattice")
    return perm
