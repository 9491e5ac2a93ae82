"""
Diagonal bases of two n-level particles.

Family 1 vector m is (1/sqrt n) sum_j |j, j+m mod n>, family 2 vector m
is (1/sqrt n) sum_j |j, m-j mod n>. Every vector is maximally
entangled between the two particles. Their supports are the cells of
two Latin squares, which are orthogonal exactly when n is odd; then every
vector of one family shares one product state with every vector of the
other and the families are mutually unbiased.
"""

from typing import Iterable, Optional, Tuple

from nit_partitions.basis.indexing import index_from_tuple
from nit_partitions.basis.vectors import ExactBasis, ExactVector
from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import DomainError, UnsupportedError
from nit_partitions.partitions import Frame, Partition
from nit_partitions.utils.logging import get_logger
from nit_partitions.utils.validation import validate_at_least, validate_in_range

logger = get_logger(__name__)


def diagonal_vector(n: int, family: int, shift: int) -> ExactVector:
    """Vector ``shift`` of family 1 (diagonal) or family 2 (antidiagonal)."""
    validate_at_least(n, 2, "n")
    validate_in_range(family, 1, 2, "family")
    validate_in_range(shift, 0, n - 1, "shift")
    coeffs = [0] * (n * n)
    for j in range(n):
        second = (j + shift) % n if family == 1 else (shift - j) % n
        coeffs[index_from_tuple((j, second), n, 2) - 1] = 1
    return ExactVector(tuple(coeffs), n)


def diagonal_bases(
    n: int, config: Optional[NitConfig] = None
) -> Tuple[ExactBasis, ExactBasis]:
    """The two n-vector diagonal families over n^2 product states.

    Raises:
        DomainError: If n < 2
        UnsupportedError: If n is even
    """
    config = config or NitConfig()
    validate_at_least(n, 2, "n")
    if n % 2 == 0:
        raise UnsupportedError(
            f"Diagonal bases need odd n, got {n}: for even n the diagonal and "
            f"antidiagonal Latin squares of order {n} are not orthogonal, so the "
            f"two families neither separate the states nor are mutually unbiased",
            feature="even_n_diagonal_bases",
        )
    config.check("max_basis_states", n * n, f"diagonal_bases({n})")

    families = tuple(
        ExactBasis(tuple(diagonal_vector(n, family, m) for m in range(n)))
        for family in (1, 2)
    )
    logger.debug(f"Built diagonal bases for n={n}")
    return families[0], families[1]


def support_partition(vectors: Iterable[ExactVector], ground_size: int) -> Partition:
    """The partition whose blocks are the vector supports.

    Raises:
        DomainError: If the supports overlap or leave states uncovered
    """
    return Partition(ground_size, tuple(v.support for v in vectors))


def diagonal_support_frame(n: int, config: Optional[NitConfig] = None) -> Frame:
    """The k = 2 frame formed by the supports of both diagonal families.

    Example:
        >>> [p.blocks for p in diagonal_support_frame(3)]
        [((1, 5, 9), (2, 6, 7), (3, 4, 8)), ((1, 6, 8), (2, 4, 9), (3, 5, 7))]
    """
    first, second = diagonal_bases(n, config=config)
    size = n * n
    return Frame(n, 2, (support_partition(first, size), support_partition(second, size)))


__all__ = [
    "diagonal_vector",
    "diagonal_bases",
    "support_partition",
    "diagonal_support_frame",
]
