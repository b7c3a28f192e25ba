"""
Partition Lattice Index
Enumerates every partition of a terminal set in the canonical total order
(block count ascending, then restricted-growth string lexicographically).
Coarser partitions always come first, so the order is refinement-compatible.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import GroundTooLargeError
from .partition import Partition, meet

logger = logging.getLogger(__name__)

MAX_TERMINALS = 6


@dataclass(frozen=True)
class LatticeIndex:
    """All partitions of a ground set with their canonical positions"""

    ground: Tuple[str, ...]
    ordered: Tuple[Partition, ...]
    position: Dict[Partition, int] = field(compare=False, hash=False, repr=False)

    @property
    def n(self) -> int:
        return len(self.ground)

    def index(self, partition: Partition) -> int:
        return self.position[partition]

    def labels(self) -> List[str]:
        return [p.to_text() for p in self.ordered]

    def __len__(self) -> int:
        return len(self.ordered)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.ordered)

    def __getitem__(self, i: int) -> Partition:
        return self.ordered[i]


def _restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    def extend(prefix: List[int], highest: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(highest + 2):
            prefix.append(b)
            yield from extend(prefix, max(highest, b))
            prefix.pop()

    if n == 0:
        yield ()
        return
    yield from extend([0], 0)


@lru_cache(maxsize=64)
def _enumerate(ground: Tuple[str, ...]) -> LatticeIndex:
    strings = sorted(
        _restricted_growth_strings(len(ground)),
        key=lambda rgs: (max(rgs) + 1, rgs)
    )
    ordered = tuple(Partition(ground, rgs) for rgs in strings)
    logger.debug(f"Enumerated {len(ordered)} partitions of a {len(ground)}-element ground set")
    return LatticeIndex(ground, ordered, {p: i for i, p in enumerate(ordered)})


def enumerate_partitions(ground: Sequence[str], max_n: int = MAX_TERMINALS) -> LatticeIndex:
    """
    All partitions of the terminal set in canonical order

    Args:
        ground: Ordered terminal labels
        max_n: Largest accepted ground size

    Returns:
        LatticeIndex of size Bell(|ground|)

    Raises:
        GroundTooLargeError: If |ground| > max_n
        ValueError: If the ground set is empty
    """
    ground = tuple(ground)
    if not ground:
        raise ValueError("Terminal set must be nonempty")
    if len(ground) > max_n:
        raise GroundTooLargeError(len(ground), max_n)
    return _enumerate(ground)


def standard_ground(n: int) -> Tuple[str, ...]:
    """Ground set "1", ..., "n" used for matrices that depend only on n"""
    return tuple(str(i) for i in range(1, n + 1))


def lattice_for_size(n: int, max_n: int = MAX_TERMINALS) -> LatticeIndex:
    return enumerate_partitions(standard_ground(n), max_n=max_n)


@lru_cache(maxsize=16)
def _meet_sizes(n: int) -> Tuple[Tuple[int, ...], ...]:
    lattice = _enumerate(standard_ground(n))
    return tuple(
        tuple(meet(a, b).num_blocks for b in lattice.ordered)
        for a in lattice.ordered
    )


def meet_size_table(n: int, max_n: int = MAX_TERMINALS) -> Tuple[Tuple[int, ...], ...]:
    """Table of |A ∧ B| over the canonical order"""
    lattice_for_size(n, max_n=max_n)
    return _meet_sizes(n)
