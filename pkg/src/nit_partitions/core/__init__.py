"""
Core building blocks: exception hierarchy and configuration.
"""

from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import (
    CapacityError,
    CodecError,
    ConfigurationError,
    DomainError,
    NitError,
    UnsupportedError,
    VerificationError,
)

__all__ = [
    "NitConfig",
    "NitError",
    "ConfigurationError",
    "DomainError",
    "UnsupportedError",
    "CapacityError",
    "VerificationError",
    "CodecError",
]
