"""
Repertoires, decision trees and search reports.

A strategy asks partition-valued questions about a hidden state. Each
internal node names a question (0-based index into the repertoire) and
has one child per block meeting its candidate set; leaves hold the
candidates left once no further question is asked.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Frame, Partition
from nit_partitions.utils.validation import validate_at_least


# ============================================================================
# REPERTOIRE
# ============================================================================

@dataclass(frozen=True)
class Repertoire:
    """The questions available to a strategy, all over one state set."""

    ground_size: int
    questions: Tuple[Partition, ...] = ()

    def __post_init__(self):
        """Validate that every question covers the ground set."""
        validate_at_least(self.ground_size, 1, "ground_size")
        questions = tuple(self.questions)
        for index, question in enumerate(questions):
            if question.ground_size != self.ground_size:
                raise DomainError(
                    f"Question {index} is over {question.ground_size} states, "
                    f"repertoire over {self.ground_size}",
                    field="questions",
                    value=question.ground_size,
                )
        object.__setattr__(self, "questions", questions)

    @classmethod
    def from_frame(cls, frame: Frame) -> "Repertoire":
        return cls(frame.ground_size, frame.partitions)

    def __len__(self) -> int:
        return len(self.questions)

    def __getitem__(self, index: int) -> Partition:
        return self.questions[index]


# ============================================================================
# DECISION TREES
# ============================================================================

@dataclass(frozen=True)
class Leaf:
    candidates: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(sorted(self.candidates)))


@dataclass(frozen=True)
class Ask:
    """Ask ``question``; ``children`` pairs a block index with its subtree."""

    question: int
    children: Tuple[Tuple[int, "Node"], ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(sorted(self.children, key=lambda c: c[0])))

    def child(self, block: int) -> Optional["Node"]:
        for index, node in self.children:
            if index == block:
                return node
        return None


Node = Union[Leaf, Ask]


@dataclass(frozen=True)
class Strategy:
    """A decision tree over a repertoire.

    Construction checks that every node's candidate set is split among
    its children by the blocks of the asked question, that children exist
    exactly for the blocks meeting the candidates, and that each leaf
    holds exactly the candidates reaching it.
    """

    ground_size: int
    questions: Tuple[Partition, ...]
    root: Node

    def __post_init__(self):
        """Validate the tree against the questions."""
        repertoire = Repertoire(self.ground_size, self.questions)
        object.__setattr__(self, "questions", repertoire.questions)
        self._check(self.root, frozenset(range(1, self.ground_size + 1)), "root")

    def _check(self, node: Node, candidates: FrozenSet[int], path: str) -> None:
        if isinstance(node, Leaf):
            if frozenset(node.candidates) != candidates:
                raise DomainError(
                    f"Leaf at {path} holds {list(node.candidates)}, "
                    f"expected {sorted(candidates)}",
                    field="strategy",
                    value=path,
                )
            return
        if not 0 <= node.question < len(self.questions):
            raise DomainError(
                f"Node at {path} asks unknown question {node.question}",
                field="strategy",
                value=node.question,
            )
        question = self.questions[node.question]
        expected = {
            b: candidates & frozenset(block)
            for b, block in enumerate(question.blocks)
            if candidates & frozenset(block)
        }
        present = [b for b, _ in node.children]
        if sorted(present) != sorted(expected) or len(set(present)) != len(present):
            raise DomainError(
                f"Node at {path} has children for blocks {present}, "
                f"expected {sorted(expected)}",
                field="strategy",
                value=path,
            )
        for block, child in node.children:
            self._check(child, expected[block], f"{path}/{node.question}:{block}")

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    def leaf_depths(self) -> Iterator[Tuple[Leaf, int]]:
        """Leaves in depth-first order, with their depth."""
        stack: List[Tuple[Node, int]] = [(self.root, 0)]
        while stack:
            node, depth = stack.pop()
            if isinstance(node, Leaf):
                yield node, depth
            else:
                for _, child in reversed(node.children):
                    stack.append((child, depth + 1))

    def leaves(self) -> List[Leaf]:
        return [leaf for leaf, _ in self.leaf_depths()]

    @property
    def depth(self) -> int:
        """Largest number of questions asked on any path."""
        return max(depth for _, depth in self.leaf_depths())

    @property
    def expected_queries(self) -> Fraction:
        """Mean number of questions under the uniform prior on states."""
        total = sum(len(leaf.candidates) * depth for leaf, depth in self.leaf_depths())
        return Fraction(total, self.ground_size)

    @property
    def residual(self) -> Tuple[Tuple[int, ...], ...]:
        """Leaves that still hold more than one candidate, sorted."""
        return tuple(
            sorted(leaf.candidates for leaf in self.leaves() if len(leaf.candidates) > 1)
        )

    @property
    def is_complete(self) -> bool:
        return not self.residual


# ============================================================================
# REPORT
# ============================================================================

@dataclass(frozen=True)
class SearchReport:
    """Cost of a strategy; depth and expectation are None when not separating."""

    separating: bool
    worst_case_depth: Optional[int] = None
    expected_queries: Optional[Fraction] = None
    residual: Tuple[Tuple[int, ...], ...] = ()

    @classmethod
    def for_strategy(cls, strategy: Strategy) -> "SearchReport":
        if strategy.is_complete:
            return cls(
                separating=True,
                worst_case_depth=strategy.depth,
                expected_queries=strategy.expected_queries,
            )
        return cls(separating=False, residual=strategy.residual)


def block_masks(questions: Sequence[Partition]) -> List[List[FrozenSet[int]]]:
    """Blocks of every question as frozensets."""
    return [[frozenset(block) for block in q.blocks] for q in questions]


__all__ = [
    "Repertoire",
    "Leaf",
    "Ask",
    "Node",
    "Strategy",
    "SearchReport",
    "block_masks",
]
