"""
Lexicographic indexing of product states.

Coordinate i of a product label is the state of particle i (0..n-1);
the state index is 1 + sum(coords[i] * n^(k-1-i)).
"""

from typing import Sequence, Tuple

from nit_partitions.core.exceptions import DomainError
from nit_partitions.utils.validation import (
    bounded_power,
    validate_at_least,
    validate_int,
)


ProductLabel = Tuple[int, ...]


def index_from_tuple(coords: Sequence[int], n: int, k: int) -> int:
    """Map product coordinates to the 1-based state index.

    Example:
        >>> index_from_tuple((1, 2), 3, 2)
        6
    """
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    if len(coords) != k:
        raise DomainError(
            f"Expected {k} coordinates, got {len(coords)}",
            field="coords",
            value=list(coords),
        )
    index = 0
    for value in coords:
        validate_int(value, "coords")
        if not 0 <= value < n:
            raise DomainError(
                f"Coordinate {value} outside 0..{n - 1}", field="coords", value=value
            )
        index = index * n + value
    return index + 1


def tuple_from_index(state: int, n: int, k: int) -> ProductLabel:
    """Inverse of index_from_tuple."""
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    validate_int(state, "state")
    if state < 1 or bounded_power(n, k, state - 1) is not None:
        raise DomainError(
            f"State {state} outside 1..{n}^{k}", field="state", value=state
        )
    rest = state - 1
    coords = []
    for _ in range(k):
        rest, value = divmod(rest, n)
        coords.append(value)
    return tuple(reversed(coords))


__all__ = ["ProductLabel", "index_from_tuple", "tuple_from_index"]
