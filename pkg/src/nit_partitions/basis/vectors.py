"""
Exact vectors with symbolic normalization.

An ExactVector stores integer coefficients c and an integer m and
denotes c / sqrt(m). Normalization, orthogonality and overlaps are then
integer or rational equalities; no floating point is involved.
"""

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import DomainError
from nit_partitions.utils.validation import validate_at_least, validate_int


@dataclass(frozen=True)
class ExactVector:
    """Integer coefficients with a 1/sqrt(norm_sq) prefactor.

    Example:
        >>> v = ExactVector((1, 0, 0, 0, 1, 0, 0, 0, 1), 3)
        >>> v.is_normalized, v.support
        (True, (1, 5, 9))
    """

    coeffs: Tuple[int, ...]
    norm_sq: int = 1

    def __post_init__(self):
        """Validate coefficients and prefactor."""
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise DomainError("Vector needs at least one coefficient", field="coeffs")
        for c in coeffs:
            validate_int(c, "coeffs")
        validate_at_least(self.norm_sq, 1, "norm_sq")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def unit(cls, size: int, state: int) -> "ExactVector":
        """The product basis vector of a 1-based state."""
        validate_at_least(size, 1, "size")
        if not 1 <= state <= size:
            raise DomainError(f"State {state} outside 1..{size}", field="state", value=state)
        coeffs = [0] * size
        coeffs[state - 1] = 1
        return cls(tuple(coeffs), 1)

    @property
    def dimension(self) -> int:
        return len(self.coeffs)

    @property
    def squared_length(self) -> int:
        """Sum of squared coefficients."""
        return sum(c * c for c in self.coeffs)

    @property
    def is_normalized(self) -> bool:
        return self.squared_length == self.norm_sq

    @property
    def support(self) -> Tuple[int, ...]:
        """1-based states with nonzero coefficient."""
        return tuple(s for s, c in enumerate(self.coeffs, start=1) if c)

    def nonzero(self) -> Dict[int, int]:
        return {s: c for s, c in enumerate(self.coeffs, start=1) if c}

    def dot(self, other: "ExactVector") -> int:
        """Integer dot product of the coefficient vectors."""
        _require_same_dimension(self, other)
        return sum(a * b for a, b in zip(self.coeffs, other.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)


def _require_same_dimension(u: ExactVector, v: ExactVector) -> None:
    if u.dimension != v.dimension:
        raise DomainError(
            f"Vector lengths differ: {u.dimension} vs {v.dimension}",
            field="coeffs",
            value=(u.dimension, v.dimension),
        )


def _require_normalized(v: ExactVector, name: str) -> None:
    if not v.is_normalized:
        raise DomainError(
            f"Vector {name} is not normalized: sum of squares "
            f"{v.squared_length} != {v.norm_sq}",
            field=name,
            value=v.squared_length,
        )


def inner_product(u: ExactVector, v: ExactVector) -> Fraction:
    """<u|v> as an exact rational.

    Only defined when norm_sq(u) * norm_sq(v) is a perfect square;
    otherwise the value is irrational and overlap_sq should be used.
    """
    dot = u.dot(v)
    scale = u.norm_sq * v.norm_sq
    root = math.isqrt(scale)
    if root * root != scale:
        raise DomainError(
            f"Inner product is irrational (prefactor 1/sqrt({scale}))",
            field="norm_sq",
            value=scale,
        )
    return Fraction(dot, root)


def overlap_sq(u: ExactVector, v: ExactVector) -> Fraction:
    """|<u|v>|^2 for normalized vectors.

    Example:
        >>> a = ExactVector((1, 0, 0, 0, 1, 0, 0, 0, 1), 3)
        >>> b = ExactVector((1, 0, 0, 0, 0, 1, 0, 1, 0), 3)
        >>> overlap_sq(a, b)
        Fraction(1, 9)
    """
    _require_same_dimension(u, v)
    _require_normalized(u, "u")
    _require_normalized(v, "v")
    dot = u.dot(v)
    return Fraction(dot * dot, u.norm_sq * v.norm_sq)


@dataclass(frozen=True)
class ExactBasis:
    """An orthonormal family of exact vectors.

    The family need not span the space: the diagonal families hold n
    vectors in dimension n^2. ``is_complete`` tells the two apart.
    """

    vectors: Tuple[ExactVector, ...]

    def __post_init__(self):
        """Validate normalization and pairwise orthogonality."""
        vectors = tuple(self.vectors)
        if not vectors:
            raise DomainError("Basis needs at least one vector", field="vectors")
        for index, v in enumerate(vectors):
            _require_same_dimension(vectors[0], v)
            _require_normalized(v, f"vectors[{index}]")
        pair = _first_non_orthogonal(vectors)
        if pair is not None:
            raise DomainError(
                f"Vectors {pair[0]} and {pair[1]} are not orthogonal",
                field="vectors",
                value=pair,
            )
        object.__setattr__(self, "vectors", vectors)

    @property
    def dimension(self) -> int:
        return self.vectors[0].dimension

    @property
    def is_complete(self) -> bool:
        return len(self.vectors) == self.dimension

    def supports(self) -> List[Tuple[int, ...]]:
        return [v.support for v in self.vectors]

    def __iter__(self) -> Iterator[ExactVector]:
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, index: int) -> ExactVector:
        return self.vectors[index]


def _first_non_orthogonal(vectors: Sequence[ExactVector]) -> Optional[Tuple[int, int]]:
    # Only pairs sharing a support state can have a nonzero dot product.
    by_state: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for index, v in enumerate(vectors):
        for state, c in v.nonzero().items():
            by_state[state].append((index, c))
    dots: Dict[Tuple[int, int], int] = defaultdict(int)
    for entries in by_state.values():
        for a in range(len(entries)):
            for b in range(a + 1, len(entries)):
                (i, ci), (j, cj) = entries[a], entries[b]
                dots[(i, j)] += ci * cj
    offending = sorted(pair for pair, value in dots.items() if value)
    return offending[0] if offending else None


def standard_basis(n: int, k: int, config: Optional[NitConfig] = None) -> ExactBasis:
    """The n^k unit vectors of the product basis, in lexicographic order."""
    config = config or NitConfig()
    validate_at_least(n, 2, "n")
    validate_at_least(k, 1, "k")
    size = config.check_power("max_basis_states", n, k, f"standard_basis({n}, {k})")
    return ExactBasis(tuple(ExactVector.unit(size, s) for s in range(1, size + 1)))


__all__ = [
    "ExactVector",
    "ExactBasis",
    "inner_product",
    "overlap_sq",
    "standard_basis",
]
