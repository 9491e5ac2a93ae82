"""
Custom exceptions for the nit partition library.

Exception hierarchy:
    NitError (base)
    ├── ConfigurationError
    ├── DomainError
    ├── CapacityError
    ├── UnsupportedError
    ├── VerificationError
    └── CodecError
"""

from typing import Any, Dict, Optional


class NitError(Exception):
    """Base exception for all nit partition errors"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} | Details: {self.details}"
        return self.message


# ============================================================================
# CONFIGURATION ERRORS
# ============================================================================

class ConfigurationError(NitError):
    """Raised when configuration is invalid or missing"""
    pass


# ============================================================================
# DOMAIN ERRORS
# ============================================================================

class DomainError(NitError):
    """An argument lies outside the domain of the operation"""

    def __init__(self, message: str, field: Optional[str] = None, value: Any = None):
        super().__init__(
            message,
            details={"field": field, "value": None if value is None else str(value)},
        )
        self.field = field
        self.value = value


class UnsupportedError(NitError):
    """Input is well formed but the requested construction is not supported"""

    def __init__(self, message: str, feature: Optional[str] = None):
        super().__init__(message, details={"feature": feature})
        self.feature = feature


# ============================================================================
# CAPACITY ERRORS
# ============================================================================

class CapacityError(NitError):
    """A configured size cap was exceeded"""

    def __init__(
        self,
        message: str,
        limit: Optional[int] = None,
        requested: Optional[int] = None,
    ):
        super().__init__(message, details={"limit": limit, "requested": requested})
        self.limit = limit
        self.requested = requested


# ============================================================================
# VERIFICATION ERRORS
# ============================================================================

class VerificationError(NitError):
    """A checked claim does not hold"""

    def __init__(self, message: str, claim: Optional[str] = None):
        super().__init__(message, details={"claim": claim})
        self.claim = claim


# ============================================================================
# CODEC ERRORS
# ============================================================================

class CodecError(NitError):
    """Malformed JSON document"""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(message, details={"path": path})
        self.path = path


__all__ = [
    "NitError",
    "ConfigurationError",
    "DomainError",
    "UnsupportedError",
    "CapacityError",
    "VerificationError",
    "CodecError",
]
