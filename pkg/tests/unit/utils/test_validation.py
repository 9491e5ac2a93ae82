"""
Unit tests for validation utilities.
"""

import pytest

from nit_partitions.core.exceptions import DomainError
from nit_partitions.utils.validation import (
    bounded_power,
    validate_at_least,
    validate_distinct,
    validate_in_range,
    validate_int,
    validate_same_length,
)


def test_validate_int_accepts_int():
    """Test integers pass"""
    validate_int(3)


@pytest.mark.parametrize("value", [True, 1.0, "1", None])
def test_validate_int_rejects(value):
    """Test non integers and booleans"""
    with pytest.raises(DomainError) as info:
        validate_int(value, "n")

    assert info.value.field == "n"


def test_validate_at_least():
    """Test lower bounds"""
    validate_at_least(2, 2, "n")
    with pytest.raises(DomainError, match=">= 2"):
        validate_at_least(1, 2, "n")


def test_validate_in_range():
    """Test inclusive ranges"""
    validate_in_range(0, 0, 2)
    validate_in_range(2, 0, 2)
    with pytest.raises(DomainError):
        validate_in_range(3, 0, 2)


def test_validate_same_length():
    """Test common length is returned"""
    assert validate_same_length([(1, 2), (3, 4)]) == 2
    with pytest.raises(DomainError, match="mixes"):
        validate_same_length([(1,), (1, 2)])
    with pytest.raises(DomainError, match="empty"):
        validate_same_length([])


def test_validate_distinct():
    """Test repeated values"""
    validate_distinct([2, 3, 5])
    with pytest.raises(DomainError):
        validate_distinct([2, 3, 2])


@pytest.mark.parametrize(
    "base,exponent,limit,expected",
    [(3, 2, 9, 9), (3, 2, 8, None), (2, 0, 1, 1), (10, 10**9, 10**6, None)],
)
def test_bounded_power(base, exponent, limit, expected):
    """Test powers up to the limit, None past it"""
    assert bounded_power(base, exponent, limit) == expected
