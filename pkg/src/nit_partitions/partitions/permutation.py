"""
Permutations of the state set {1..N}.

Images are stored in one-line form (``images[i - 1] == p(i)``); cycle
notation such as ``(1)(2,9,3,5)(4,6,7,8)`` is parsed and rendered through
sympy, which works 0-based internally.
"""

import random
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy.combinatorics import Permutation as SymPermutation

from nit_partitions.core.exceptions import DomainError
from nit_partitions.utils.validation import validate_at_least, validate_distinct


_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")
_CYCLE_TEXT = re.compile(r"\s*(\([^()]*\)\s*)*")
_STATE_TEXT = re.compile(r"[0-9]+")

Cycles = Sequence[Sequence[int]]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..size}.

    Example:
        >>> p = Permutation.from_cycles("(1)(2,9,3,5)(4,6,7,8)", 9)
        >>> p(2), p(5)
        (9, 2)
        >>> p.cycles()
        '(1)(2,9,3,5)(4,6,7,8)'
    """

    size: int
    images: Tuple[int, ...]

    def __post_init__(self):
        """Validate bijectivity."""
        validate_at_least(self.size, 1, "size")
        images = tuple(self.images)
        if len(images) != self.size:
            raise DomainError(
                f"Permutation of size {self.size} needs {self.size} images, "
                f"got {len(images)}",
                field="images",
                value=len(images),
            )
        if sorted(images) != list(range(1, self.size + 1)):
            raise DomainError(
                f"Images are not a bijection of 1..{self.size}",
                field="images",
                value=list(images),
            )
        object.__setattr__(self, "images", images)

    def __call__(self, state: int) -> int:
        if not 1 <= state <= self.size:
            raise DomainError(
                f"State {state} outside 1..{self.size}", field="state", value=state
            )
        return self.images[state - 1]

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, size: int) -> "Permutation":
        return cls(size, tuple(range(1, size + 1)))

    @classmethod
    def from_cycles(cls, cycles: Union[str, Cycles], size: int) -> "Permutation":
        """Build from 1-based cycles, given as text or nested sequences."""
        validate_at_least(size, 1, "size")
        parsed = parse_cycles(cycles) if isinstance(cycles, str) else [
            list(c) for c in cycles
        ]
        for cycle in parsed:
            for state in cycle:
                if not 1 <= state <= size:
                    raise DomainError(
                        f"Cycle element {state} outside 1..{size}",
                        field="cycles",
                        value=state,
                    )
        # Cycles must be disjoint; products of overlapping cycles are not parsed.
        validate_distinct([s for cycle in parsed for s in cycle], "cycles")
        try:
            sym = SymPermutation([[s - 1 for s in c] for c in parsed if c], size=size)
        except ValueError as e:
            raise DomainError(f"Invalid cycles: {e}", field="cycles", value=cycles) from e
        return cls._from_sympy(sym)

    @classmethod
    def random(cls, size: int, rng: Optional[random.Random] = None) -> "Permutation":
        """Uniform random permutation drawn from ``rng``."""
        rng = rng or random.Random()
        return cls(size, tuple(rng.sample(range(1, size + 1), size)))

    @classmethod
    def _from_sympy(cls, sym: SymPermutation) -> "Permutation":
        return cls(sym.size, tuple(i + 1 for i in sym.array_form))

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------

    def _to_sympy(self) -> SymPermutation:
        return SymPermutation([i - 1 for i in self.images])

    def inverse(self) -> "Permutation":
        return self._from_sympy(~self._to_sympy())

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first, then ``self``."""
        if other.size != self.size:
            raise DomainError(
                f"Sizes differ: {self.size} vs {other.size}",
                field="size",
                value=(self.size, other.size),
            )
        return Permutation(self.size, tuple(self(other(s)) for s in range(1, self.size + 1)))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def apply_to(self, states: Iterable[int]) -> Tuple[int, ...]:
        """Image of a set of states, sorted."""
        return tuple(sorted(self(s) for s in states))

    # ------------------------------------------------------------------
    # Rendering
    # ------------------------------------------------------------------

    def cycle_list(self) -> List[List[int]]:
        """Full cycle form including fixed points, each cycle led by its minimum."""
        return [[s + 1 for s in c] for c in self._to_sympy().full_cyclic_form]

    def cycles(self) -> str:
        return "".join(
            "(" + ",".join(str(s) for s in cycle) + ")" for cycle in self.cycle_list()
        )


def parse_cycles(text: str) -> List[List[int]]:
    """Parse ``"(1)(2,9,3,5)"`` into ``[[1], [2, 9, 3, 5]]``."""
    if not _CYCLE_TEXT.fullmatch(text):
        raise DomainError(f"Malformed cycle notation {text!r}", field="cycles", value=text)
    cycles = []
    for body in _CYCLE_PATTERN.findall(text):
        items = [item.strip() for item in body.split(",") if item.strip()]
        if not all(_STATE_TEXT.fullmatch(item) for item in items):
            raise DomainError(
                f"Malformed cycle notation {text!r}", field="cycles", value=text
            )
        try:
            cycles.append([int(item) for item in items])
        except ValueError as e:
            # beyond the interpreter's integer digit limit
            raise DomainError(
                f"State label too long in {text[:40]!r}", field="cycles"
            ) from e
    return cycles


__all__ = ["Permutation", "parse_cycles"]
