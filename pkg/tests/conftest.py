"""
Pytest configuration and shared fixtures.
"""

import pytest

from nit_partitions.core.config import NitConfig
from nit_partitions.partitions import Frame, Partition, Permutation


@pytest.fixture
def two_trit_frame():
    """Provide the frame of two trits in lexicographic order"""
    return Frame(
        3,
        2,
        (
            Partition(9, ((1, 2, 3), (4, 5, 6), (7, 8, 9))),
            Partition(9, ((1, 4, 7), (2, 5, 8), (3, 6, 9))),
        ),
    )


@pytest.fixture
def entangled_frame():
    """Provide the diagonal/antidiagonal frame of two trits"""
    return Frame(
        3,
        2,
        (
            Partition(9, ((1, 5, 9), (2, 6, 7), (3, 4, 8))),
            Partition(9, ((1, 6, 8), (2, 4, 9), (3, 5, 7))),
        ),
    )


@pytest.fixture
def unbalanced_partition():
    """Provide the unbalanced three-block partition of nine states"""
    return Partition(9, ((1,), (2, 3), (4, 5, 6, 7, 8, 9)))


@pytest.fixture
def quoted_cycle():
    """Provide the permutation carrying the entangled frame to the two-trit frame"""
    return Permutation.from_cycles("(1)(2,9,3,5)(4,6,7,8)", 9)


@pytest.fixture
def config():
    """Provide default configuration"""
    return NitConfig()


@pytest.fixture
def tight_config():
    """Provide configuration with small caps"""
    return NitConfig(
        max_states=8,
        max_basis_states=8,
        max_permutation_search_states=4,
        max_enumeration_states=4,
        max_search_states=4,
        max_oracle_states=4,
    )
