"""Unit tests for exhaustive frame enumeration."""

import pytest

from nit_partitions.core.exceptions import CapacityError
from nit_partitions.partitions import (
    Partition,
    all_partitions,
    balanced_partitions,
    canonical_frame,
    enumerate_separating_frames,
    is_separating,
    iter_separating_frames,
)


@pytest.mark.parametrize(
    "ground_size,blocks,count",
    [(4, 2, 3), (6, 2, 10), (6, 3, 15), (9, 3, 280), (5, 2, 0)],
)
def test_balanced_partition_counts(ground_size, blocks, count):
    """Test the number of equal block partitions"""
    assert len(list(balanced_partitions(ground_size, blocks))) == count


def test_balanced_partitions_are_ordered():
    """Test balanced partitions come in lexicographic order"""
    found = [p.blocks for p in balanced_partitions(4, 2)]

    assert found == [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]


def test_all_partitions_count():
    """Test all 2-block partitions of 4 states (Stirling number 7)"""
    found = all_partitions(4, 2)

    assert len(found) == 7
    assert Partition(4, ((1,), (2, 3, 4))) in found
    assert all(p.block_count == 2 for p in found)


def test_two_bits_have_six_frames():
    """Test (2, 2) yields 6 ordered separating frames"""
    enumeration = enumerate_separating_frames(2, 2)

    assert enumeration.count == 6
    assert canonical_frame(2, 2) in enumeration.frames
    assert all(is_separating(f) for f in enumeration.frames)


@pytest.mark.parametrize("n", [2, 3])
def test_single_particle_has_one_frame(n):
    """Test (n, 1) yields only the discrete partition"""
    enumeration = enumerate_separating_frames(n, 1)

    assert enumeration.count == 1
    assert enumeration.frames[0][0] == Partition.discrete(n)


def test_unbalanced_candidates_add_nothing():
    """Test admitting unbalanced candidates keeps the count"""
    assert enumerate_separating_frames(2, 2, balanced_only=False).count == 6


def test_iteration_is_lazy():
    """Test the stream yields before it is exhausted"""
    stream = iter_separating_frames(2, 2)

    assert next(stream) == canonical_frame(2, 2)


def test_capacity(tight_config):
    """Test the enumeration cap"""
    with pytest.raises(CapacityError):
        enumerate_separating_frames(2, 3, config=tight_config)


def test_capacity_with_enormous_state_count():
    """Test n^k far past the cap fails as a capacity error"""
    with pytest.raises(CapacityError):
        enumerate_separating_frames(10, 5000)
