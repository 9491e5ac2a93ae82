"""
Brute-force decision tree oracle and the counting lower bound.

The oracle enumerates every decision tree on a repertoire: at each node
any question not yet asked on the path may be asked, whether it splits
the candidates or not, and a node may stop only when no question splits
it. Nothing is memoized or pruned, so it shares no code path with the
planner and only runs on small state sets.
"""

import itertools
from typing import FrozenSet, Optional, Set, Tuple

from nit_partitions.core.config import NitConfig
from nit_partitions.search.strategy import Repertoire, block_masks
from nit_partitions.utils.logging import get_logger, log_execution_time
from nit_partitions.utils.validation import validate_at_least

logger = get_logger(__name__)

Cost = Tuple[int, int]


def information_lower_bound(n: int, ground_size: int) -> int:
    """Smallest d with n^d >= ground_size.

    No tree whose questions have at most n blocks identifies one of
    ground_size states in fewer than d questions.
    """
    validate_at_least(n, 2, "n")
    validate_at_least(ground_size, 1, "ground_size")
    depth, reach = 0, 1
    while reach < ground_size:
        depth += 1
        reach *= n
    return depth


@log_execution_time(logger)
def brute_force_optimum(repertoire: Repertoire, config: Optional[NitConfig] = None) -> Cost:
    """Lexicographically least (worst case depth, total leaf depth) over all trees.

    The total is the sum over states of the number of questions asked
    before the state's leaf; dividing by the ground size gives the
    expected number of questions.
    """
    config = config or NitConfig()
    size = repertoire.ground_size
    config.check("max_oracle_states", size, "brute_force_optimum")
    blocks = block_masks(repertoire.questions)

    def splittable(candidates: FrozenSet[int]) -> bool:
        return any(
            sum(1 for block in question if candidates & block) > 1 for question in blocks
        )

    def costs(candidates: FrozenSet[int], used: FrozenSet[int]) -> Set[Cost]:
        found: Set[Cost] = set()
        if not splittable(candidates):
            found.add((0, 0))
        for q, question in enumerate(blocks):
            if q in used:
                continue
            parts = [candidates & block for block in question if candidates & block]
            options = [costs(part, used | {q}) for part in parts]
            for combo in itertools.product(*options):
                found.add(
                    (
                        1 + max(worst for worst, _ in combo),
                        len(candidates) + sum(total for _, total in combo),
                    )
                )
        return found

    everything = costs(frozenset(range(1, size + 1)), frozenset())
    logger.debug(f"brute_force_optimum saw {len(everything)} root cost pairs")
    return min(everything)


__all__ = ["information_lower_bound", "brute_force_optimum"]
