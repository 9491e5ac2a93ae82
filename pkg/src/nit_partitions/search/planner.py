"""
Planning n-ary search strategies.

The optimal planner works on bitmasks of candidate states. A candidate
set is a leaf when no question splits it, so questions already asked on
the path are never repeated. Optimality is lexicographic: minimal worst
case depth first, then minimal expected number of questions among the
trees achieving it, then the lowest question index.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional, Tuple

from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Frame, is_separating
from nit_partitions.search.strategy import Ask, Leaf, Node, Repertoire, SearchReport, Strategy
from nit_partitions.utils.logging import get_logger, log_execution_time

logger = get_logger(__name__)


# ============================================================================
# CANONICAL PLAN
# ============================================================================

def plan_canonical(frame: Frame) -> Strategy:
    """Ask the frame's partitions in order 1..k.

    Raises:
        DomainError: If the frame is not separating
    """
    verdict = is_separating(frame)
    if not verdict:
        raise DomainError(
            f"Frame is not separating; block tuple {verdict.witness} meets "
            f"{sorted(verdict.witness_states)}",
            field="frame",
            value=verdict.witness,
        )

    def build(level: int, candidates: FrozenSet[int]) -> Node:
        if level == frame.k:
            return Leaf(tuple(candidates))
        children = []
        for index, block in enumerate(frame[level].blocks):
            inside = candidates & frozenset(block)
            if inside:
                children.append((index, build(level + 1, inside)))
        return Ask(level, tuple(children))

    root = build(0, frozenset(range(1, frame.ground_size + 1)))
    return Strategy(frame.ground_size, frame.partitions, root)


# ============================================================================
# OPTIMAL PLAN
# ============================================================================

_UNREACHABLE = float("inf")


class _Planner:
    """Memoized worst-case and budgeted total-cost tables over bitmasks."""

    def __init__(self, repertoire: Repertoire):
        self.repertoire = repertoire
        self.worst = functools.lru_cache(maxsize=None)(self._worst)
        self.total = functools.lru_cache(maxsize=None)(self._total)
        self.masks: List[List[int]] = [
            [sum(1 << (s - 1) for s in block) for block in question.blocks]
            for question in repertoire.questions
        ]

    def splits(self, candidates: int) -> List[Tuple[int, List[Tuple[int, int]]]]:
        """Questions splitting ``candidates`` with their (block, part) lists."""
        found = []
        for q, blocks in enumerate(self.masks):
            parts = [(b, candidates & m) for b, m in enumerate(blocks) if candidates & m]
            if len(parts) > 1:
                found.append((q, parts))
        return found

    def _worst(self, candidates: int) -> int:
        options = self.splits(candidates)
        if not options:
            return 0
        return 1 + min(max(self.worst(part) for _, part in parts) for _, parts in options)

    def _total(self, candidates: int, budget: int) -> float:
        """Least sum of leaf depths over trees of depth at most ``budget``."""
        options = self.splits(candidates)
        if not options:
            return 0
        if budget == 0:
            return _UNREACHABLE
        best = _UNREACHABLE
        for _, parts in options:
            cost = bin(candidates).count("1") + sum(
                self.total(part, budget - 1) for _, part in parts
            )
            best = min(best, cost)
        return best

    def build(self, candidates: int, budget: int) -> Node:
        options = self.splits(candidates)
        if not options:
            return Leaf(_states(candidates))
        target = self.total(candidates, budget)
        for q, parts in options:
            cost = bin(candidates).count("1") + sum(
                self.total(part, budget - 1) for _, part in parts
            )
            if cost == target:
                return Ask(q, tuple((b, self.build(part, budget - 1)) for b, part in parts))
        raise AssertionError("no question attains the tabulated cost")


def _states(mask: int) -> Tuple[int, ...]:
    return tuple(s + 1 for s in range(mask.bit_length()) if mask >> s & 1)


@log_execution_time(logger)
def optimal_strategy(
    repertoire: Repertoire, config: Optional[NitConfig] = None
) -> Tuple[Strategy, SearchReport]:
    """Adaptive strategy that is optimal over all trees on ``repertoire``.

    When the meet of all questions is not discrete the strategy still
    resolves every state down to its block of that meet and the report
    is marked not separating with those blocks as residual.

    Example:
        >>> from nit_partitions.partitions import canonical_frame
        >>> _, report = optimal_strategy(Repertoire.from_frame(canonical_frame(3, 2)))
        >>> report.worst_case_depth, report.expected_queries
        (2, Fraction(2, 1))
    """
    config = config or NitConfig()
    size = repertoire.ground_size
    config.check("max_search_states", size, "optimal_strategy")

    planner = _Planner(repertoire)
    full = (1 << size) - 1
    depth = planner.worst(full)
    root = planner.build(full, depth)
    strategy = Strategy(size, repertoire.questions, root)
    logger.debug(
        f"optimal_strategy over {size} states and {len(repertoire)} questions: "
        f"depth {depth}, {planner.total.cache_info().currsize} tabulated subproblems"
    )
    return strategy, SearchReport.for_strategy(strategy)


def search_report(repertoire: Repertoire, config: Optional[NitConfig] = None) -> SearchReport:
    return optimal_strategy(repertoire, config=config)[1]


# ============================================================================
# COMPARISON
# ============================================================================

@dataclass(frozen=True)
class ComparisonReport:
    """Optimal costs of two repertoires over the same states.

    Differences are ``other - baseline`` and are only defined when both
    repertoires separate.
    """

    baseline: SearchReport
    other: SearchReport
    depth_difference: Optional[int] = None
    expected_difference: Optional[Fraction] = None
    other_inferior: bool = False
    equal: bool = False


def compare(
    baseline: Repertoire, other: Repertoire, config: Optional[NitConfig] = None
) -> ComparisonReport:
    """Compare the optimal strategies of two repertoires.

    ``other`` is inferior when it does not separate, or when either its
    worst case depth or its expected number of questions is strictly
    larger than the baseline's.
    """
    if baseline.ground_size != other.ground_size:
        raise DomainError(
            f"Repertoires over {baseline.ground_size} and {other.ground_size} states",
            field="ground_size",
            value=(baseline.ground_size, other.ground_size),
        )
    first = search_report(baseline, config=config)
    second = search_report(other, config=config)
    equal = first == second

    if first.separating and second.separating:
        assert first.worst_case_depth is not None and second.worst_case_depth is not None
        assert first.expected_queries is not None and second.expected_queries is not None
        depth_difference: Optional[int] = second.worst_case_depth - first.worst_case_depth
        expected_difference: Optional[Fraction] = (
            second.expected_queries - first.expected_queries
        )
        inferior = depth_difference > 0 or expected_difference > 0
    else:
        depth_difference = None
        expected_difference = None
        inferior = not second.separating and not equal

    return ComparisonReport(
        baseline=first,
        other=second,
        depth_difference=depth_difference,
        expected_difference=expected_difference,
        other_inferior=inferior,
        equal=equal,
    )


__all__ = [
    "plan_canonical",
    "optimal_strategy",
    "search_report",
    "ComparisonReport",
    "compare",
]
