"""
Partitions as measurements on exact states.

A partition acts as a set of filters: block B passes the component of a
state supported on B. A family of vectors is compatible with a partition
when each vector passes exactly one filter unchanged.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from nit_partitions.basis.vectors import ExactVector
from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Partition


@dataclass(frozen=True)
class RefinementVerdict:
    """Outcome of basis_refines.

    Attributes:
        compatible: Every vector support lies inside one block
        assignment: Block index (0-based) per vector when compatible
        straddling: Index of the first vector meeting two or more blocks
        bijective: Compatible and vectors and blocks correspond one to one
    """

    compatible: bool
    assignment: Tuple[int, ...] = ()
    straddling: Optional[int] = None
    bijective: bool = False

    def __bool__(self) -> bool:
        return self.compatible


def _require_ground(vector: ExactVector, partition: Partition, name: str) -> None:
    if vector.dimension != partition.ground_size:
        raise DomainError(
            f"{name} has {vector.dimension} coefficients, partition covers "
            f"{partition.ground_size} states",
            field=name,
            value=vector.dimension,
        )


def basis_refines(vectors: Sequence[ExactVector], partition: Partition) -> RefinementVerdict:
    """Assign every vector to the block containing its support.

    Example:
        >>> p = Partition(2, ((1,), (2,)))
        >>> basis_refines([ExactVector((0, 1)), ExactVector((1, 0))], p).assignment
        (1, 0)
    """
    assignment = []
    for index, vector in enumerate(vectors):
        _require_ground(vector, partition, f"vectors[{index}]")
        support = vector.support
        if not support:
            raise DomainError(
                f"Vector {index} is zero", field="vectors", value=index
            )
        blocks = {partition.block_of(s) for s in support}
        if len(blocks) != 1:
            return RefinementVerdict(compatible=False, straddling=index)
        assignment.append(blocks.pop())

    bijective = len(assignment) == partition.block_count and len(set(assignment)) == len(
        assignment
    )
    return RefinementVerdict(
        compatible=True, assignment=tuple(assignment), bijective=bijective
    )


def measurement_probabilities(state: ExactVector, partition: Partition) -> Tuple[Fraction, ...]:
    """Exact probability of each block for a normalized state.

    Block B has probability sum_{s in B} c_s^2 / m; the result sums to 1.
    """
    _require_ground(state, partition, "state")
    if not state.is_normalized:
        raise DomainError(
            f"State is not normalized: sum of squares {state.squared_length} "
            f"!= {state.norm_sq}",
            field="state",
            value=state.squared_length,
        )
    return tuple(
        Fraction(sum(state.coeffs[s - 1] ** 2 for s in block), state.norm_sq)
        for block in partition.blocks
    )


__all__ = ["RefinementVerdict", "basis_refines", "measurement_probabilities"]
