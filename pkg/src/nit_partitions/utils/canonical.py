"""
Canonical JSON encoding.

Object keys are sorted, no insignificant whitespace is emitted and
identical documents always produce identical bytes (RFC 8785).
Arbitrary precision integers travel as decimal strings; rationals as
``{"num": "...", "den": "..."}`` in lowest terms.
"""

import re
from fractions import Fraction
from typing import Any, Dict, Optional

import rfc8785

from nit_partitions.core.exceptions import CodecError


_DECIMAL = re.compile(r"[+-]?[0-9]+")


def canonical_json(data: Any) -> str:
    """Canonicalize JSON data according to RFC 8785.

    Example:
        >>> canonical_json({"b": 2, "a": [1, 2]})
        '{"a":[1,2],"b":2}'
    """
    return rfc8785.dumps(data).decode("utf-8")


def encode_int(value: int) -> str:
    """Encode an integer as a decimal string."""
    return str(int(value))


def decode_int(raw: Any, path: Optional[str] = None) -> int:
    """Decode an integer given as JSON number or decimal string."""
    if isinstance(raw, bool):
        raise CodecError(f"Expected integer, got boolean {raw!r}", path=path)
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        text = raw.strip()
        if _DECIMAL.fullmatch(text):
            try:
                return int(text)
            except ValueError as e:
                raise CodecError(
                    f"Integer string of {len(text)} digits is too long", path=path
                ) from e
    raise CodecError(f"Expected integer or decimal string, got {raw!r}", path=path)


def encode_fraction(value: Fraction) -> Dict[str, str]:
    """Encode a rational in lowest terms."""
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def decode_fraction(raw: Any, path: Optional[str] = None) -> Fraction:
    """Decode ``{"num", "den"}`` into a Fraction."""
    if not isinstance(raw, dict) or set(raw) != {"num", "den"}:
        raise CodecError(f"Expected {{'num','den'}} object, got {raw!r}", path=path)
    den = decode_int(raw["den"], path=f"{path}.den" if path else "den")
    if den == 0:
        raise CodecError("Zero denominator", path=path)
    return Fraction(decode_int(raw["num"], path=f"{path}.num" if path else "num"), den)


__all__ = [
    "canonical_json",
    "encode_int",
    "decode_int",
    "encode_fraction",
    "decode_fraction",
]
