"""
Set Partitions
Partitions of an ordered ground set stored as restricted-growth strings,
with the lattice operations used by the splitting formulas
"""

from dataclasses import dataclass
from typing import Hashable, Iterable, List, Sequence, Tuple

from networkx.utils import UnionFind

from .errors import GroundMismatchError


def _canonical_rgs(labels: Sequence[Hashable]) -> Tuple[int, ...]:
    seen = {}
    rgs = []
    for label in labels:
        if label not in seen:
            seen[label] = len(seen)
        rgs.append(seen[label])
    return tuple(rgs)


@dataclass(frozen=True)
class Partition:
    """
    Partition of an ordered ground set

    rgs[i] is the block number of ground[i]; block k first appears after
    blocks 0..k-1 (restricted-growth string), so the encoding is unique.
    """

    ground: Tuple[str, ...]
    rgs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'ground', tuple(self.ground))
        object.__setattr__(self, 'rgs', tuple(int(b) for b in self.rgs))

        if len(set(self.ground)) != len(self.ground):
            raise ValueError(f"Ground set has repeated labels: {self.ground}")
        if len(self.rgs) != len(self.ground):
            raise ValueError(
                f"Restricted-growth string {self.rgs} does not match ground {self.ground}"
            )
        highest = -1
        for b in self.rgs:
            if b < 0 or b > highest + 1:
                raise ValueError(f"Not a restricted-growth string: {self.rgs}")
            highest = max(highest, b)

    @classmethod
    def from_labels(cls, ground: Sequence[str], labels: Sequence[Hashable]) -> 'Partition':
        """Partition whose blocks are the classes of equal labels"""
        return cls(tuple(ground), _canonical_rgs(labels))

    @classmethod
    def from_blocks(cls, ground: Sequence[str], blocks: Iterable[Iterable[str]]) -> 'Partition':
        """
        Partition from explicit blocks

        Raises:
            ValueError: If the blocks do not cover the ground set exactly once
        """
        ground = tuple(ground)
        owner = {}
        for index, block in enumerate(blocks):
            block = list(block)
            if not block:
                raise ValueError("Partition blocks must be nonempty")
            for label in block:
                if label not in ground:
                    raise ValueError(f"Label {label!r} is not in the ground set {ground}")
                if label in owner:
                    raise ValueError(f"Label {label!r} appears in two blocks")
                owner[label] = index
        missing = [u for u in ground if u not in owner]
        if missing:
            raise ValueError(f"Labels not covered by any block: {missing}")
        return cls.from_labels(ground, [owner[u] for u in ground])

    @classmethod
    def minimal(cls, ground: Sequence[str]) -> 'Partition':
        """One-block partition identifying the whole ground set"""
        return cls(tuple(ground), (0,) * len(ground))

    @classmethod
    def discrete(cls, ground: Sequence[str]) -> 'Partition':
        """All-singletons partition"""
        return cls(tuple(ground), tuple(range(len(ground))))

    @property
    def num_blocks(self) -> int:
        return max(self.rgs) + 1 if self.rgs else 0

    @property
    def blocks(self) -> Tuple[Tuple[str, ...], ...]:
        """Blocks in order of first appearance along the ground order, members in ground order"""
        grouped: List[List[str]] = [[] for _ in range(self.num_blocks)]
        for label, b in zip(self.ground, self.rgs):
            grouped[b].append(label)
        return tuple(tuple(block) for block in grouped)

    def block_of(self, label: str) -> Tuple[str, ...]:
        return self.blocks[self.rgs[self.ground.index(label)]]

    def refines(self, other: 'Partition') -> bool:
        """True if every block of self lies inside a block of other"""
        _check_ground(self, other)
        mapping = {}
        for mine, theirs in zip(self.rgs, other.rgs):
            if mapping.setdefault(mine, theirs) != theirs:
                return False
        return True

    def to_text(self) -> str:
        """Blocks of 1-based ground positions, e.g. "12|3|4" """
        positions = {label: str(i + 1) for i, label in enumerate(self.ground)}
        return "|".join("".join(positions[u] for u in block) for block in self.blocks)

    def to_json(self) -> List[List[str]]:
        return [list(block) for block in self.blocks]

    def __str__(self) -> str:
        return self.to_text()


def _check_ground(a: Partition, b: Partition) -> None:
    if a.ground != b.ground:
        raise GroundMismatchError(f"Partitions over different grounds: {a.ground} vs {b.ground}")


def meet(a: Partition, b: Partition) -> Partition:
    """
    Infimum with coarser partitions below finer ones

    This is the finest common coarsening: blocks of a and b that
    intersect are merged transitively.
    """
    _check_ground(a, b)
    uf = UnionFind(range(len(a.ground)))
    first_a = {}
    first_b = {}
    for i, (ba, bb) in enumerate(zip(a.rgs, b.rgs)):
        uf.union(i, first_a.setdefault(ba, i))
        uf.union(i, first_b.setdefault(bb, i))
    return Partition.from_labels(a.ground, [uf[i] for i in range(len(a.ground))])


def join(a: Partition, b: Partition) -> Partition:
    """Supremum: the common refinement made of nonempty blockwise intersections"""
    _check_ground(a, b)
    return Partition.from_labels(a.ground, list(zip(a.rgs, b.rgs)))


def blocks(a: Partition) -> int:
    """Number of blocks |a|"""
    return a.num_blocks
