"""
Diagonal nit operators.

A nit operator is a diagonal matrix over the product basis whose level
sets realize a partition; its distinct entries tag the outcomes. Labels
are exact integers, so distinctness and factorisation are decidable.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import isprime, prime

from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Frame, Partition, Permutation, canonical_frame
from nit_partitions.utils.validation import (
    validate_at_least,
    validate_distinct,
    validate_int,
)


@dataclass(frozen=True)
class DiagonalOperator:
    """Diagonal operator given by its N integer entries.

    Example:
        >>> DiagonalOperator((2, 2, 3)).level_sets().blocks
        ((1, 2), (3,))
    """

    diag: Tuple[int, ...]

    def __post_init__(self):
        """Validate entries."""
        diag = tuple(self.diag)
        if not diag:
            raise DomainError("Diagonal operator needs at least one entry", field="diag")
        for value in diag:
            validate_int(value, "diag")
        object.__setattr__(self, "diag", diag)

    @property
    def size(self) -> int:
        return len(self.diag)

    @property
    def spectrum(self) -> Tuple[int, ...]:
        """Distinct entries in order of first appearance."""
        return tuple(dict.fromkeys(self.diag))

    def level_sets(self) -> Partition:
        return partition_from_operator(self)

    def __len__(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class PrimeLabelSet:
    """n distinct primes tagging the outcomes of one observable."""

    primes: Tuple[int, ...]

    def __post_init__(self):
        """Validate primality and distinctness."""
        primes = tuple(self.primes)
        if not primes:
            raise DomainError("Label set cannot be empty", field="primes")
        for q in primes:
            validate_int(q, "primes")
            if not isprime(q):
                raise DomainError(f"Label {q} is not prime", field="primes", value=q)
        validate_distinct(primes, "primes")
        object.__setattr__(self, "primes", primes)

    def __len__(self) -> int:
        return len(self.primes)


def default_prime_labels(n: int, k: int) -> List[PrimeLabelSet]:
    """Consecutive primes, n per observable: (2,3,5), (7,11,13), ... for n=3."""
    validate_at_least(n, 1, "n")
    validate_at_least(k, 1, "k")
    return [
        PrimeLabelSet(tuple(int(prime(i * n + j + 1)) for j in range(n)))
        for i in range(k)
    ]


def operator_from_partition(partition: Partition, labels: Sequence[int]) -> DiagonalOperator:
    """diag[s] is the label of the block containing s.

    Example:
        >>> p = Partition(4, ((1, 2), (3, 4)))
        >>> operator_from_partition(p, [2, 3]).diag
        (2, 2, 3, 3)
    """
    labels = tuple(labels)
    if len(labels) != partition.block_count:
        raise DomainError(
            f"{len(labels)} labels for {partition.block_count} blocks",
            field="labels",
            value=list(labels),
        )
    for label in labels:
        validate_int(label, "labels")
    validate_distinct(labels, "labels")
    return DiagonalOperator(
        tuple(labels[partition.block_of(s)] for s in range(1, partition.ground_size + 1))
    )


def partition_from_operator(operator: DiagonalOperator) -> Partition:
    """Level sets of the diagonal."""
    return Partition.from_labels(operator.diag)


def frame_from_operators(
    operators: Sequence[DiagonalOperator], n: int, k: int, balanced: bool = True
) -> Frame:
    """The frame formed by the level sets of k nit operators."""
    return Frame(n, k, tuple(partition_from_operator(op) for op in operators), balanced)


def canonical_nit_operators(
    n: int,
    k: int,
    labels: Optional[Sequence[Sequence[int]]] = None,
    require_disjoint: bool = True,
    config: Optional[NitConfig] = None,
) -> List[DiagonalOperator]:
    """The k operators whose level sets are canonical_frame(n, k).

    Operator i repeats a group of n runs of length n^(k-i), the group
    appearing n^(i-1) times. ``labels`` holds one label set per observable
    (PrimeLabelSet or plain prime sequences); primes shared between
    observables are rejected unless ``require_disjoint`` is False.
    """
    frame = canonical_frame(n, k, config=config)
    if labels is None:
        label_sets = default_prime_labels(n, k)
    else:
        label_sets = [
            ls if isinstance(ls, PrimeLabelSet) else PrimeLabelSet(tuple(ls))
            for ls in labels
        ]
    if len(label_sets) != k:
        raise DomainError(
            f"{len(label_sets)} label sets for {k} observables",
            field="labels",
            value=len(label_sets),
        )
    for position, label_set in enumerate(label_sets, start=1):
        if len(label_set) != n:
            raise DomainError(
                f"Label set {position} has {len(label_set)} primes, expected {n}",
                field="labels",
                value=label_set.primes,
            )
    if require_disjoint:
        validate_distinct([q for ls in label_sets for q in ls.primes], "labels")

    return [
        operator_from_partition(partition, label_set.primes)
        for partition, label_set in zip(frame.partitions, label_sets)
    ]


def permute_columns(
    operators: Sequence[DiagonalOperator], permutation: Permutation
) -> List[DiagonalOperator]:
    """Permute the columns of the stacked (k x N) diagonal matrix.

    Column s moves to position p(s), so the level sets of the result are
    the images of the original level sets under p.
    """
    result = []
    for op in operators:
        if op.size != permutation.size:
            raise DomainError(
                f"Permutation of size {permutation.size} on an operator of size {op.size}",
                field="permutation",
                value=permutation.size,
            )
        moved = [0] * op.size
        for state, value in enumerate(op.diag, start=1):
            moved[permutation(state) - 1] = value
        result.append(DiagonalOperator(tuple(moved)))
    return result


__all__ = [
    "DiagonalOperator",
    "PrimeLabelSet",
    "default_prime_labels",
    "operator_from_partition",
    "partition_from_operator",
    "frame_from_operators",
    "canonical_nit_operators",
    "permute_columns",
]
