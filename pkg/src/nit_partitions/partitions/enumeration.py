"""
Exhaustive enumeration of separating frames for small state sets.

Used as an oracle: the count of ordered separating frames must agree with
the orbit of the canonical frame under all state permutations.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_partitions

from nit_partitions.core.config import NitConfig
from nit_partitions.partitions.partition import Block, Frame, Partition
from nit_partitions.utils.logging import get_logger, log_execution_time
from nit_partitions.utils.validation import validate_at_least

logger = get_logger(__name__)


def balanced_partitions(ground_size: int, blocks: int) -> Iterator[Partition]:
    """All partitions of {1..ground_size} into ``blocks`` blocks of equal size,
    in lexicographic order of their canonical block tuples."""
    validate_at_least(ground_size, 1, "ground_size")
    validate_at_least(blocks, 1, "blocks")
    if ground_size % blocks:
        return
    width = ground_size // blocks

    def split(remaining: Tuple[int, ...]) -> Iterator[Tuple[Block, ...]]:
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for combo in itertools.combinations(rest, width - 1):
            chosen = set(combo)
            left = tuple(s for s in rest if s not in chosen)
            for tail in split(left):
                yield ((first,) + combo,) + tail

    for block_tuple in split(tuple(range(1, ground_size + 1))):
        yield Partition(ground_size, block_tuple)


def all_partitions(ground_size: int, blocks: int) -> List[Partition]:
    """All partitions of {1..ground_size} into exactly ``blocks`` blocks, sorted."""
    validate_at_least(ground_size, 1, "ground_size")
    validate_at_least(blocks, 1, "blocks")
    found = [
        Partition(ground_size, tuple(tuple(b) for b in parts))
        for parts in multiset_partitions(list(range(1, ground_size + 1)), blocks)
    ]
    return sorted(found, key=lambda p: p.blocks)


@dataclass(frozen=True)
class FrameEnumeration:
    """Exact count plus the frames in canonical order."""

    n: int
    k: int
    count: int
    frames: Tuple[Frame, ...]


def iter_separating_frames(
    n: int,
    k: int,
    balanced_only: bool = True,
    config: Optional[NitConfig] = None,
) -> Iterator[Frame]:
    """Stream every ordered separating frame of k partitions with n blocks.

    After j partitions of a separating frame have been chosen, every class
    of their meet holds exactly n^(k-j) states; candidates violating this
    are discarded as soon as they are placed. Unbalanced candidates fail
    already at j = 1, so ``balanced_only`` only changes the candidate pool.
    """
    config = config or NitConfig()
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    size = config.check_power(
        "max_enumeration_states", n, k, f"enumerate_separating_frames({n}, {k})"
    )

    if balanced_only:
        candidates = list(balanced_partitions(size, n))
    else:
        candidates = all_partitions(size, n)
    logger.debug(f"Enumerating frames for n={n}, k={k} over {len(candidates)} candidates")

    owners = [
        tuple(c.block_of(s) for s in range(1, size + 1)) for c in candidates
    ]

    return _extend_frames(n, k, candidates, owners, [], [0] * size)


def _extend_frames(
    n: int,
    k: int,
    candidates: Sequence[Partition],
    owners: Sequence[Tuple[int, ...]],
    chosen: List[int],
    labels: Sequence[int],
) -> Iterator[Frame]:
    depth = len(chosen)
    if depth == k:
        yield Frame(n, k, tuple(candidates[i] for i in chosen))
        return
    target = n ** (k - depth - 1)
    for index, owner in enumerate(owners):
        refined = [label * n + o for label, o in zip(labels, owner)]
        sizes = Counter(refined)
        if len(sizes) == n ** (depth + 1) and set(sizes.values()) == {target}:
            chosen.append(index)
            yield from _extend_frames(n, k, candidates, owners, chosen, refined)
            chosen.pop()


@log_execution_time(logger)
def enumerate_separating_frames(
    n: int,
    k: int,
    balanced_only: bool = True,
    config: Optional[NitConfig] = None,
) -> FrameEnumeration:
    """Collect iter_separating_frames with its exact count."""
    frames = tuple(iter_separating_frames(n, k, balanced_only, config))
    return FrameEnumeration(n=n, k=k, count=len(frames), frames=frames)


__all__ = [
    "balanced_partitions",
    "all_partitions",
    "FrameEnumeration",
    "iter_separating_frames",
    "enumerate_separating_frames",
]
