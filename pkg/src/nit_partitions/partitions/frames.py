"""
Frame construction, verification and the permutation action.

The i-th partition of the canonical frame groups the n^k product states
by the i-th coordinate of their lexicographic label; any frame obtained
from it by permuting states is again separating, though permutations need
not preserve locality.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions.partition import Block, Frame, Partition
from nit_partitions.partitions.permutation import Permutation
from nit_partitions.utils.logging import get_logger, log_execution_time
from nit_partitions.utils.validation import bounded_power, validate_at_least

logger = get_logger(__name__)


def _coordinate(state: int, position: int, n: int, k: int) -> int:
    """Lexicographic coordinate ``position`` (1-based) of ``state``."""
    return ((state - 1) // n ** (k - position)) % n


# ============================================================================
# CANONICAL FRAME
# ============================================================================

def canonical_frame(n: int, k: int, config: Optional[NitConfig] = None) -> Frame:
    """The frame whose i-th partition is the state of particle i.

    Partition i has n blocks of n^(k-1) states made of n^(i-1) repeats of
    runs of length n^(k-i).

    Example:
        >>> [p.blocks for p in canonical_frame(2, 2)]
        [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    """
    config = config or NitConfig()
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    size = config.check_power("max_states", n, k, f"canonical_frame({n}, {k})")

    partitions = []
    for position in range(1, k + 1):
        blocks: List[List[int]] = [[] for _ in range(n)]
        for state in range(1, size + 1):
            blocks[_coordinate(state, position, n, k)].append(state)
        partitions.append(Partition(size, tuple(tuple(b) for b in blocks)))
    return Frame(n, k, tuple(partitions))


# ============================================================================
# SEPARATION
# ============================================================================

@dataclass(frozen=True)
class SeparationVerdict:
    """Outcome of is_separating.

    ``witness`` is a block-index tuple whose intersection has size != 1:
    the first collision (two or more states) if any, otherwise the first
    empty intersection. ``first_gap`` is the first empty intersection.
    """

    separating: bool
    witness: Optional[Tuple[int, ...]] = None
    witness_blocks: Tuple[Block, ...] = ()
    witness_states: FrozenSet[int] = frozenset()
    first_gap: Optional[Tuple[int, ...]] = None
    collision_count: int = 0
    gap_count: int = 0

    def __bool__(self) -> bool:
        return self.separating


def _signatures(partitions: Tuple[Partition, ...], size: int) -> Dict[Tuple[int, ...], List[int]]:
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for state in range(1, size + 1):
        groups.setdefault(tuple(p.block_of(state) for p in partitions), []).append(state)
    return groups


def is_separating(frame: Frame) -> SeparationVerdict:
    """Every block tuple meets in exactly one state and all states are covered.

    Equivalently the meet of the frame's partitions is discrete and the
    number of block tuples equals the number of states.
    """
    partitions = frame.partitions
    size = frame.ground_size
    groups = _signatures(partitions, size)

    collisions = sorted(sig for sig, states in groups.items() if len(states) > 1)
    choices = math.prod(p.block_count for p in partitions)
    gap_count = choices - len(groups)

    if not collisions and gap_count == 0:
        return SeparationVerdict(separating=True)

    first_gap = None
    if gap_count:
        ranges = [range(p.block_count) for p in partitions]
        first_gap = next(c for c in itertools.product(*ranges) if c not in groups)

    witness = collisions[0] if collisions else first_gap
    assert witness is not None
    return SeparationVerdict(
        separating=False,
        witness=witness,
        witness_blocks=tuple(p.blocks[i] for p, i in zip(partitions, witness)),
        witness_states=frozenset(groups.get(witness, ())),
        first_gap=first_gap,
        collision_count=len(collisions),
        gap_count=gap_count,
    )


# ============================================================================
# PERMUTATION ACTION
# ============================================================================

def apply_permutation(frame: Frame, permutation: Permutation) -> Frame:
    """Replace every block B by p(B) = {p(s) : s in B}."""
    if permutation.size != frame.ground_size:
        raise DomainError(
            f"Permutation of size {permutation.size} on a frame over "
            f"{frame.ground_size} states",
            field="permutation",
            value=permutation.size,
        )
    partitions = tuple(
        Partition(
            frame.ground_size,
            tuple(permutation.apply_to(block) for block in partition.blocks),
        )
        for partition in frame.partitions
    )
    return Frame(frame.n, frame.k, partitions, balanced=frame.balanced)


@log_execution_time(logger)
def mapping_permutations(
    a: Frame,
    b: Frame,
    config: Optional[NitConfig] = None,
    limit: Optional[int] = None,
) -> List[Permutation]:
    """All permutations p with apply_permutation(a, p) == b.

    Backtracks over the images of states 1..N while keeping, for every
    partition position, a partial bijection between the blocks of ``a``
    and the blocks of ``b``. Results come in lexicographic order of their
    one-line form; ``limit`` stops after that many.
    """
    config = config or NitConfig()
    if (a.n, a.k) != (b.n, b.k):
        raise DomainError(
            f"Frames differ in shape: (n={a.n}, k={a.k}) vs (n={b.n}, k={b.k})",
            field="frame",
            value=((a.n, a.k), (b.n, b.k)),
        )
    size = a.ground_size
    config.check("max_permutation_search_states", size, "mapping_permutations")

    positions = range(a.k)
    for i in positions:
        if sorted(a[i].block_sizes) != sorted(b[i].block_sizes):
            logger.debug(f"Block sizes differ at partition {i + 1}; no mapping exists")
            return []

    a_owner = [[0] + [a[i].block_of(s) for s in range(1, size + 1)] for i in positions]
    b_owner = [[0] + [b[i].block_of(s) for s in range(1, size + 1)] for i in positions]
    a_sizes = [a[i].block_sizes for i in positions]
    b_sizes = [b[i].block_sizes for i in positions]
    forward: List[Dict[int, int]] = [{} for _ in positions]
    backward: List[Dict[int, int]] = [{} for _ in positions]

    images = [0] * (size + 1)
    used = [False] * (size + 1)
    results: List[Permutation] = []

    def extend(state: int) -> bool:
        if state > size:
            results.append(Permutation(size, tuple(images[1:])))
            return limit is not None and len(results) >= limit
        for target in range(1, size + 1):
            if used[target]:
                continue
            added = []
            consistent = True
            for i in positions:
                src, dst = a_owner[i][state], b_owner[i][target]
                mapped, reverse = forward[i].get(src), backward[i].get(dst)
                if mapped is None and reverse is None:
                    if a_sizes[i][src] != b_sizes[i][dst]:
                        consistent = False
                        break
                    forward[i][src] = dst
                    backward[i][dst] = src
                    added.append(i)
                elif mapped != dst or reverse != src:
                    consistent = False
                    break
            done = False
            if consistent:
                images[state] = target
                used[target] = True
                done = extend(state + 1)
                used[target] = False
            for i in added:
                del forward[i][a_owner[i][state]]
                del backward[i][b_owner[i][target]]
            if done:
                return True
        return False

    extend(1)
    logger.debug(f"mapping_permutations found {len(results)} permutations over {size} states")
    return results


def stabilizer_order(frame: Frame, config: Optional[NitConfig] = None) -> int:
    """Number of state permutations fixing the ordered frame."""
    return len(mapping_permutations(frame, frame, config=config))


def orbit_size(frame: Frame, config: Optional[NitConfig] = None) -> int:
    """Number of distinct ordered frames reachable by permuting states."""
    return math.factorial(frame.ground_size) // stabilizer_order(frame, config=config)


def is_equivalent(a: Frame, b: Frame, config: Optional[NitConfig] = None) -> bool:
    """True when some relabelling of states carries ``a`` onto ``b``."""
    if (a.n, a.k) != (b.n, b.k):
        return False
    return bool(mapping_permutations(a, b, config=config, limit=1))


# ============================================================================
# LOCALITY
# ============================================================================

@dataclass(frozen=True)
class Locality:
    """Local(particle, relabeling) or Nonlocal.

    ``relabeling[b]`` is the coordinate value (0-based) that block b of the
    partition selects on ``particle`` (1-based).
    """

    local: bool
    particle: Optional[int] = None
    relabeling: Optional[Tuple[int, ...]] = None

    @classmethod
    def nonlocal_(cls) -> "Locality":
        return cls(local=False)

    @property
    def is_identity(self) -> bool:
        return self.relabeling is not None and self.relabeling == tuple(
            range(len(self.relabeling))
        )


def classify_partition(partition: Partition, n: int, k: int) -> Locality:
    """Test whether ``partition`` is induced by one particle's coordinate."""
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    if bounded_power(n, k, partition.ground_size) != partition.ground_size:
        raise DomainError(
            f"Partition over {partition.ground_size} states, expected {n}^{k}",
            field="ground_size",
            value=partition.ground_size,
        )
    if partition.block_count != n:
        raise DomainError(
            f"Partition has {partition.block_count} blocks, expected {n}",
            field="blocks",
            value=partition.block_count,
        )

    for particle in range(1, k + 1):
        values = []
        for block in partition.blocks:
            coords = {_coordinate(s, particle, n, k) for s in block}
            if len(coords) != 1:
                break
            values.append(coords.pop())
        else:
            if len(set(values)) == n:
                return Locality(local=True, particle=particle, relabeling=tuple(values))
    return Locality.nonlocal_()


__all__ = [
    "canonical_frame",
    "SeparationVerdict",
    "is_separating",
    "apply_permutation",
    "mapping_permutations",
    "stabilizer_order",
    "orbit_size",
    "is_equivalent",
    "Locality",
    "classify_partition",
]
