"""
Running a strategy against a hidden state.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from nit_partitions.core.exceptions import DomainError
from nit_partitions.search.strategy import Leaf, Strategy
from nit_partitions.utils.validation import validate_int


@dataclass(frozen=True)
class Step:
    """One answered question: the block (0-based) containing the hidden state."""

    question: int
    block: int
    states: Tuple[int, ...]


@dataclass(frozen=True)
class Evaluation:
    """Transcript plus the identified state, or the residual candidates."""

    transcript: Tuple[Step, ...]
    identified: Optional[int] = None
    residual: Tuple[int, ...] = ()

    @property
    def queries(self) -> int:
        return len(self.transcript)


def evaluate(strategy: Strategy, hidden: int) -> Evaluation:
    """Answer every question on the path of ``hidden`` truthfully.

    Example:
        >>> from nit_partitions.partitions import canonical_frame
        >>> from nit_partitions.search.planner import plan_canonical
        >>> result = evaluate(plan_canonical(canonical_frame(3, 2)), 3)
        >>> [step.states for step in result.transcript], result.identified
        ([(1, 2, 3), (3, 6, 9)], 3)
    """
    validate_int(hidden, "hidden")
    if not 1 <= hidden <= strategy.ground_size:
        raise DomainError(
            f"Hidden state {hidden} outside 1..{strategy.ground_size}",
            field="hidden",
            value=hidden,
        )

    transcript: List[Step] = []
    node = strategy.root
    while not isinstance(node, Leaf):
        question = strategy.questions[node.question]
        block = question.block_of(hidden)
        transcript.append(Step(node.question, block, question.blocks[block]))
        child = node.child(block)
        assert child is not None
        node = child

    if len(node.candidates) == 1:
        return Evaluation(tuple(transcript), identified=node.candidates[0])
    return Evaluation(tuple(transcript), residual=node.candidates)


__all__ = ["Step", "Evaluation", "evaluate"]
