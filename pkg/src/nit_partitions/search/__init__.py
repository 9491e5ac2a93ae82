"""
Search simulation

n-ary search with partition-valued questions: canonical and optimal
planning, evaluation against a hidden state, comparison of repertoires
and a brute-force oracle for small state sets.
"""

from .strategy import Ask, Leaf, Node, Repertoire, SearchReport, Strategy, block_masks

from .planner import (
    ComparisonReport,
    compare,
    optimal_strategy,
    plan_canonical,
    search_report,
)

from .evaluator import Evaluation, Step, evaluate

from .oracle import brute_force_optimum, information_lower_bound

__all__ = [
    # Trees
    "Repertoire",
    "Leaf",
    "Ask",
    "Node",
    "Strategy",
    "SearchReport",
    "block_masks",
    # Planning
    "plan_canonical",
    "optimal_strategy",
    "search_report",
    "ComparisonReport",
    "compare",
    # Evaluation
    "Step",
    "Evaluation",
    "evaluate",
    # Oracle
    "information_lower_bound",
    "brute_force_optimum",
]
