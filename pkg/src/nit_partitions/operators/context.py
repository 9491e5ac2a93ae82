"""
Context operator: the componentwise product of nit operators.

With pairwise disjoint prime labels every product of one prime per
observable is distinct, so the context operator has n^k distinct
eigenvalues and each eigenvalue factors back into the outcome tuple.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from sympy import factorint

from nit_partitions.core.exceptions import DomainError
from nit_partitions.operators.diagonal import DiagonalOperator, PrimeLabelSet
from nit_partitions.utils.logging import get_logger
from nit_partitions.utils.validation import validate_at_least, validate_same_length

logger = get_logger(__name__)


def context_operator(operators: Sequence[DiagonalOperator]) -> DiagonalOperator:
    """Componentwise product of equal-length diagonal operators.

    Example:
        >>> a = DiagonalOperator((2, 2, 3, 3))
        >>> b = DiagonalOperator((5, 7, 5, 7))
        >>> context_operator([a, b]).diag
        (10, 14, 15, 21)
    """
    validate_same_length([op.diag for op in operators], "operators")
    columns = zip(*(op.diag for op in operators))
    return DiagonalOperator(tuple(math.prod(column) for column in columns))


@dataclass(frozen=True)
class SpectrumVerdict:
    """``collision`` holds the 1-based positions of the first repeated entry."""

    distinct: bool
    collision: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.distinct


def has_distinct_spectrum(operator: DiagonalOperator) -> SpectrumVerdict:
    """Pairwise comparison of the diagonal entries.

    The first position whose value was already seen is reported together
    with the position of that earlier occurrence.
    """
    seen: Dict[int, int] = {}
    for position, value in enumerate(operator.diag, start=1):
        if value in seen:
            return SpectrumVerdict(distinct=False, collision=(seen[value], position))
        seen[value] = position
    return SpectrumVerdict(distinct=True)


def decode_eigenvalue(value: int, label_sets: Sequence[PrimeLabelSet]) -> Tuple[int, ...]:
    """Recover the outcome (0-based) of every observable from a context eigenvalue.

    Each label set must contribute exactly one prime factor and nothing
    else may remain; for canonical operators the result equals the
    lexicographic coordinates of the state.

    Example:
        >>> decode_eigenvalue(33, [PrimeLabelSet((2, 3, 5)), PrimeLabelSet((7, 11, 13))])
        (1, 1)
    """
    validate_at_least(value, 1, "value")
    remaining = {int(q): int(e) for q, e in factorint(value).items()}
    outcomes = []
    for position, label_set in enumerate(label_sets, start=1):
        hits = [j for j, q in enumerate(label_set.primes) if remaining.get(q, 0) > 0]
        if len(hits) != 1:
            raise DomainError(
                f"Eigenvalue {value} carries {len(hits)} primes of label set {position}",
                field="value",
                value=value,
            )
        remaining[label_set.primes[hits[0]]] -= 1
        outcomes.append(hits[0])

    leftover = {q: e for q, e in remaining.items() if e}
    if leftover:
        raise DomainError(
            f"Eigenvalue {value} has factors {leftover} outside the label sets",
            field="value",
            value=value,
        )
    logger.debug(f"Decoded eigenvalue {value} as outcomes {outcomes}")
    return tuple(outcomes)


__all__ = [
    "context_operator",
    "SpectrumVerdict",
    "has_distinct_spectrum",
    "decode_eigenvalue",
]
