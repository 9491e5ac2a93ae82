"""
Utility modules for the nit partition library.
"""

from nit_partitions.utils.canonical import (
    canonical_json,
    decode_fraction,
    decode_int,
    encode_fraction,
    encode_int,
)
from nit_partitions.utils.logging import get_logger, log_execution_time, set_level
from nit_partitions.utils.validation import (
    bounded_power,
    validate_at_least,
    validate_distinct,
    validate_in_range,
    validate_int,
    validate_same_length,
)

__all__ = [
    # Logging
    "get_logger",
    "set_level",
    "log_execution_time",
    # Validation
    "validate_int",
    "validate_at_least",
    "validate_in_range",
    "validate_same_length",
    "validate_distinct",
    "bounded_power",
    # Canonical JSON
    "canonical_json",
    "encode_int",
    "decode_int",
    "encode_fraction",
    "decode_fraction",
]
