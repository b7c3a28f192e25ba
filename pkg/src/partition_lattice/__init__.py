"""
Partition Lattice Module
Set partitions of the terminal set, lattice operations and canonical ordering
"""

from .errors import GroundMismatchError, GroundTooLargeError, OutOfRangeError
from .partition import Partition, blocks, join, meet
from .lattice import (
    MAX_TERMINALS,
    LatticeIndex,
    enumerate_partitions,
    lattice_for_size,
    meet_size_table,
    standard_ground,
)
from .combinatorics import MAX_STIRLING_N, bell, stirling2
from .reference_order import REFERENCE_ORDER_4, reference_order_permutation, reference_partitions

__all__ = [
    'GroundMismatchError',
    'GroundTooLargeError',
    'OutOfRangeError',
    'Partition',
    'blocks',
    'join',
    'meet',
    'MAX_TERMINALS',
    'LatticeIndex',
    'enumerate_partitions',
    'lattice_for_size',
    'meet_size_table',
    'standard_ground',
    'MAX_STIRLING_N',
    'bell',
    'stirling2',
    'REFERENCE_ORDER_4',
    'reference_order_permutation',
    'reference_partitions',
]
