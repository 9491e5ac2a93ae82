"""
Validation utilities for arguments shared by several modules.
"""

from typing import Any, Optional, Sequence

from nit_partitions.core.exceptions import DomainError


def validate_int(value: Any, field_name: str = "value") -> None:
    """Validate value is an integer (bool excluded)

    Raises:
        DomainError: If value is not an int
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(
            f"Field '{field_name}' must be int, got {type(value).__name__}",
            field=field_name,
            value=value
        )


def validate_at_least(value: Any, minimum: int, field_name: str = "value") -> None:
    """Validate value is an integer not smaller than ``minimum``

    Raises:
        DomainError: If value is not an int or below the minimum
    """
    validate_int(value, field_name)
    if value < minimum:
        raise DomainError(
            f"Field '{field_name}' must be >= {minimum}, got {value}",
            field=field_name,
            value=value
        )


def validate_in_range(
    value: Any,
    low: int,
    high: int,
    field_name: str = "value"
) -> None:
    """Validate ``low <= value <= high``

    Raises:
        DomainError: If value is not an int or out of range
    """
    validate_int(value, field_name)
    if not low <= value <= high:
        raise DomainError(
            f"Field '{field_name}' must lie in {low}..{high}, got {value}",
            field=field_name,
            value=value
        )


def validate_same_length(
    sequences: Sequence[Sequence[Any]],
    field_name: str = "value"
) -> int:
    """Validate all sequences share one length and return it

    Raises:
        DomainError: If the input is empty or lengths differ
    """
    if not sequences:
        raise DomainError(
            f"Field '{field_name}' cannot be empty",
            field=field_name,
            value=sequences
        )
    lengths = sorted({len(s) for s in sequences})
    if len(lengths) != 1:
        raise DomainError(
            f"Field '{field_name}' mixes lengths {lengths}",
            field=field_name,
            value=lengths
        )
    return lengths[0]


def bounded_power(base: int, exponent: int, limit: int) -> Optional[int]:
    """Return base**exponent if it does not exceed ``limit``, else None

    Multiplies step by step and stops once the product passes the limit,
    so huge exponents are rejected without building the power.
    """
    value = 1
    for _ in range(exponent):
        value *= base
        if value > limit:
            return None
    return value


def validate_distinct(values: Sequence[Any], field_name: str = "value") -> None:
    """Validate values are pairwise distinct

    Raises:
        DomainError: If a value repeats
    """
    if len(set(values)) != len(values):
        raise DomainError(
            f"Field '{field_name}' must hold pairwise distinct values",
            field=field_name,
            value=list(values)
        )


__all__ = [
    "validate_int",
    "validate_at_least",
    "validate_in_range",
    "validate_same_length",
    "validate_distinct",
    "bounded_power",
]
