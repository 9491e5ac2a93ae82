"""
State partitions and frames.

A partition divides the state set {1..N} into disjoint nonempty blocks;
a frame is an ordered list of k partitions over N = n^k states, one per
particle, each with n blocks. Both are immutable and stored in canonical
form: every block sorted ascending, blocks ordered by their smallest
element.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from nit_partitions.core.exceptions import DomainError
from nit_partitions.utils.validation import bounded_power, validate_at_least, validate_int


Block = Tuple[int, ...]


def _canonical_blocks(blocks: Iterable[Iterable[int]]) -> Tuple[Block, ...]:
    canon = [tuple(sorted(block)) for block in blocks]
    for block in canon:
        if not block:
            raise DomainError("Partition blocks must be nonempty", field="blocks")
    return tuple(sorted(canon, key=lambda b: b[0]))


@dataclass(frozen=True)
class Partition:
    """A division of {1..ground_size} into disjoint nonempty blocks.

    Example:
        >>> Partition(9, ((1, 2, 3), (7, 8, 9), (6, 4, 5))).blocks
        ((1, 2, 3), (4, 5, 6), (7, 8, 9))
    """

    ground_size: int
    blocks: Tuple[Block, ...]
    _owner: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate and canonicalize the blocks."""
        validate_at_least(self.ground_size, 1, "ground_size")
        canon = _canonical_blocks(self.blocks)

        owner = [-1] * (self.ground_size + 1)
        for index, block in enumerate(canon):
            for state in block:
                validate_int(state, "state")
                if not 1 <= state <= self.ground_size:
                    raise DomainError(
                        f"State {state} outside 1..{self.ground_size}",
                        field="blocks",
                        value=state,
                    )
                if owner[state] != -1:
                    raise DomainError(
                        f"State {state} appears in more than one block",
                        field="blocks",
                        value=state,
                    )
                owner[state] = index

        missing = [s for s in range(1, self.ground_size + 1) if owner[s] == -1]
        if missing:
            raise DomainError(
                f"Blocks do not cover states {missing[:10]}",
                field="blocks",
                value=missing[:10],
            )

        object.__setattr__(self, "blocks", canon)
        object.__setattr__(self, "_owner", tuple(owner))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        """Build a partition, taking the ground size from the covered states."""
        canon = _canonical_blocks(blocks)
        size = sum(len(b) for b in canon)
        return cls(size, canon)

    @classmethod
    def discrete(cls, ground_size: int) -> "Partition":
        """The partition into ``ground_size`` singletons."""
        return cls(ground_size, tuple((s,) for s in range(1, ground_size + 1)))

    @classmethod
    def trivial(cls, ground_size: int) -> "Partition":
        """The one-block partition."""
        return cls(ground_size, (tuple(range(1, ground_size + 1)),))

    @classmethod
    def from_labels(cls, labels: Sequence[object]) -> "Partition":
        """Level sets of a labelling: states sharing a label share a block."""
        groups: Dict[object, List[int]] = {}
        for state, label in enumerate(labels, start=1):
            groups.setdefault(label, []).append(state)
        return cls(len(labels), tuple(tuple(g) for g in groups.values()))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def is_balanced(self) -> bool:
        """All blocks hold the same number of states."""
        return len(set(self.block_sizes)) == 1

    @property
    def is_discrete(self) -> bool:
        return self.block_count == self.ground_size

    def block_of(self, state: int) -> int:
        """Index of the block containing ``state``."""
        if not 1 <= state <= self.ground_size:
            raise DomainError(
                f"State {state} outside 1..{self.ground_size}",
                field="state",
                value=state,
            )
        return self._owner[state]

    def block_set(self, index: int) -> FrozenSet[int]:
        if not 0 <= index < self.block_count:
            raise DomainError(
                f"Block index {index} outside 0..{self.block_count - 1}",
                field="block",
                value=index,
            )
        return frozenset(self.blocks[index])

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of ``other``."""
        _require_same_ground(self, other)
        return all(
            len({other.block_of(s) for s in block}) == 1 for block in self.blocks
        )

    def to_list(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]


@dataclass(frozen=True)
class Frame:
    """An ordered list of k partitions of n blocks each over n^k states.

    ``balanced`` frames additionally require every block to hold n^(k-1)
    states; unbalanced partitions are admitted only with balanced=False.
    """

    n: int
    k: int
    partitions: Tuple[Partition, ...]
    balanced: bool = True

    def __post_init__(self):
        """Validate frame shape."""
        validate_at_least(self.n, 2, "n")
        validate_at_least(self.k, 1, "k")
        object.__setattr__(self, "partitions", tuple(self.partitions))

        if len(self.partitions) != self.k:
            raise DomainError(
                f"Frame with k={self.k} needs {self.k} partitions, "
                f"got {len(self.partitions)}",
                field="partitions",
                value=len(self.partitions),
            )

        for position, partition in enumerate(self.partitions, start=1):
            size = bounded_power(self.n, self.k, partition.ground_size)
            if size != partition.ground_size:
                raise DomainError(
                    f"Partition {position} is over {partition.ground_size} states, "
                    f"frame needs {self.n}^{self.k}",
                    field="partitions",
                    value=partition.ground_size,
                )
            if partition.block_count != self.n:
                raise DomainError(
                    f"Partition {position} has {partition.block_count} blocks, "
                    f"frame needs {self.n}",
                    field="partitions",
                    value=partition.block_count,
                )
            if self.balanced and set(partition.block_sizes) != {size // self.n}:
                raise DomainError(
                    f"Partition {position} is unbalanced {partition.block_sizes}",
                    field="partitions",
                    value=partition.block_sizes,
                )

    @property
    def ground_size(self) -> int:
        return self.n ** self.k

    def __iter__(self):
        return iter(self.partitions)

    def __len__(self) -> int:
        return len(self.partitions)

    def __getitem__(self, index: int) -> Partition:
        return self.partitions[index]


def _require_same_ground(p: Partition, q: Partition) -> None:
    if p.ground_size != q.ground_size:
        raise DomainError(
            f"Ground sizes differ: {p.ground_size} vs {q.ground_size}",
            field="ground_size",
            value=(p.ground_size, q.ground_size),
        )


def meet(p: Partition, q: Partition) -> Partition:
    """All nonempty pairwise intersections of a block of p with a block of q.

    Example:
        >>> f1 = Partition(4, ((1, 2), (3, 4)))
        >>> f2 = Partition(4, ((1, 3), (2, 4)))
        >>> meet(f1, f2).blocks
        ((1,), (2,), (3,), (4,))
    """
    _require_same_ground(p, q)
    return Partition.from_labels(
        [(p.block_of(s), q.block_of(s)) for s in range(1, p.ground_size + 1)]
    )


def meet_all(partitions: Sequence[Partition], ground_size: int = 0) -> Partition:
    """Iterated meet; the trivial partition of ``ground_size`` when empty."""
    if not partitions:
        validate_at_least(ground_size, 1, "ground_size")
        return Partition.trivial(ground_size)
    size = partitions[0].ground_size
    for other in partitions[1:]:
        _require_same_ground(partitions[0], other)
    return Partition.from_labels(
        [tuple(p.block_of(s) for p in partitions) for s in range(1, size + 1)]
    )


def conjunct(frame: Frame, outcomes: Sequence[int]) -> FrozenSet[int]:
    """Intersection of the chosen block of each partition.

    ``outcomes[i]`` is a 0-based block index into ``frame.partitions[i]``;
    an empty outcome list yields the full state set.
    """
    if len(outcomes) > len(frame.partitions):
        raise DomainError(
            f"{len(outcomes)} outcomes for a frame of {len(frame.partitions)} partitions",
            field="outcomes",
            value=list(outcomes),
        )
    states = frozenset(range(1, frame.ground_size + 1))
    for partition, index in zip(frame.partitions, outcomes):
        validate_int(index, "outcome")
        states &= partition.block_set(index)
    return states


__all__ = [
    "Block",
    "Partition",
    "Frame",
    "meet",
    "meet_all",
    "conjunct",
]
