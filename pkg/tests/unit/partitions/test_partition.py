"""Unit tests for Partition, Frame and the meet."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Frame, Partition, conjunct, meet, meet_all


def labelled_pair():
    """Two labellings of the same state set."""
    return st.integers(min_value=1, max_value=10).flatmap(
        lambda size: st.tuples(
            st.lists(st.integers(0, 3), min_size=size, max_size=size),
            st.lists(st.integers(0, 3), min_size=size, max_size=size),
        )
    )


def labelled_triple():
    """Three labellings of the same state set."""
    return st.integers(min_value=1, max_value=10).flatmap(
        lambda size: st.tuples(
            *(st.lists(st.integers(0, 3), min_size=size, max_size=size) for _ in range(3))
        )
    )


class TestPartition:
    """Test Partition construction and queries."""

    def test_blocks_are_canonicalized(self):
        """Test blocks are sorted internally and ordered by minimum."""
        partition = Partition(9, ((9, 7, 8), (3, 1, 2), (5, 4, 6)))

        assert partition.blocks == ((1, 2, 3), (4, 5, 6), (7, 8, 9))

    def test_equal_regardless_of_input_order(self):
        """Test equality compares canonical blocks."""
        assert Partition(4, ((3, 4), (1, 2))) == Partition(4, ((2, 1), (4, 3)))

    def test_overlapping_blocks_rejected(self):
        """Test a state in two blocks is rejected."""
        with pytest.raises(DomainError, match="more than one block"):
            Partition(4, ((1, 2), (2, 3, 4)))

    def test_uncovered_state_rejected(self):
        """Test blocks must cover every state."""
        with pytest.raises(DomainError, match="do not cover"):
            Partition(4, ((1, 2), (3,)))

    def test_out_of_range_state_rejected(self):
        """Test states must lie in 1..N."""
        with pytest.raises(DomainError, match="outside"):
            Partition(3, ((1, 2), (3, 4)))

    def test_empty_block_rejected(self):
        """Test empty blocks are rejected."""
        with pytest.raises(DomainError, match="nonempty"):
            Partition(2, ((1, 2), ()))

    def test_from_blocks_infers_ground_size(self):
        """Test from_blocks takes N from the covered states."""
        partition = Partition.from_blocks([[4, 5, 6], [1, 2, 3]])

        assert partition.ground_size == 6
        assert partition.blocks == ((1, 2, 3), (4, 5, 6))

    def test_from_labels(self):
        """Test level sets of a labelling."""
        partition = Partition.from_labels(["a", "b", "a", "c"])

        assert partition.blocks == ((1, 3), (2,), (4,))

    def test_balance(self, unbalanced_partition):
        """Test balanced and unbalanced partitions."""
        assert Partition.discrete(4).is_balanced
        assert not unbalanced_partition.is_balanced
        assert unbalanced_partition.block_sizes == (1, 2, 6)

    def test_block_of(self, two_trit_frame):
        """Test the owning block of a state."""
        assert two_trit_frame[1].block_of(6) == 2

    def test_block_of_out_of_range(self):
        """Test block_of rejects unknown states."""
        with pytest.raises(DomainError):
            Partition.trivial(3).block_of(4)

    def test_refines(self, two_trit_frame):
        """Test refinement order."""
        assert Partition.discrete(9).refines(two_trit_frame[0])
        assert two_trit_frame[0].refines(Partition.trivial(9))
        assert not two_trit_frame[0].refines(two_trit_frame[1])


class TestFrame:
    """Test Frame validation."""

    def test_frame_shape(self, two_trit_frame):
        """Test n, k and ground size."""
        assert two_trit_frame.ground_size == 9
        assert len(two_trit_frame) == 2

    def test_wrong_partition_count(self, two_trit_frame):
        """Test k partitions are required."""
        with pytest.raises(DomainError, match="needs 2 partitions"):
            Frame(3, 2, (two_trit_frame[0],))

    def test_wrong_ground_size(self):
        """Test every partition needs n^k states."""
        bits = Partition(4, ((1, 2), (3, 4)))

        with pytest.raises(DomainError, match=r"frame needs 2\^3"):
            Frame(2, 3, (bits, bits, bits))

    def test_wrong_block_count(self):
        """Test every partition needs n blocks."""
        with pytest.raises(DomainError, match="blocks"):
            Frame(2, 2, (Partition.trivial(4), Partition(4, ((1, 3), (2, 4)))))

    def test_unbalanced_rejected_by_default(self, unbalanced_partition, two_trit_frame):
        """Test balanced frames reject unbalanced partitions."""
        with pytest.raises(DomainError, match="unbalanced"):
            Frame(3, 2, (unbalanced_partition, two_trit_frame[1]))

    def test_unbalanced_admitted_when_flagged(self, unbalanced_partition, two_trit_frame):
        """Test balanced=False admits unbalanced partitions."""
        frame = Frame(3, 2, (unbalanced_partition, two_trit_frame[1]), balanced=False)

        assert not frame.balanced

    def test_n_must_be_at_least_two(self):
        """Test n >= 2."""
        with pytest.raises(DomainError):
            Frame(1, 1, (Partition.trivial(1),))


class TestMeet:
    """Test meet, meet_all and conjunct."""

    def test_two_trit_meet_is_discrete(self, two_trit_frame):
        """Test the two trit partitions meet in nine singletons."""
        assert meet(two_trit_frame[0], two_trit_frame[1]) == Partition.discrete(9)

    def test_meet_with_unbalanced(self, unbalanced_partition, two_trit_frame):
        """Test the meet of the unbalanced partition with the second trit."""
        joint = meet(unbalanced_partition, two_trit_frame[1])

        assert joint.blocks == ((1,), (2,), (3,), (4, 7), (5, 8), (6, 9))

    def test_meet_ground_mismatch(self):
        """Test meet rejects different ground sets."""
        with pytest.raises(DomainError):
            meet(Partition.trivial(3), Partition.trivial(4))

    def test_meet_all_empty_is_trivial(self):
        """Test the empty meet is the one block partition."""
        assert meet_all([], ground_size=4) == Partition.trivial(4)

    def test_meet_all_empty_needs_ground_size(self):
        """Test the empty meet needs a ground size."""
        with pytest.raises(DomainError):
            meet_all([])

    def test_conjunct_two_trits(self, two_trit_frame):
        """Test {1,2,3} and {3,6,9} meet in state 3."""
        assert conjunct(two_trit_frame, [0, 2]) == frozenset({3})

    def test_conjunct_entangled(self, entangled_frame):
        """Test {1,5,9} and {2,4,9} meet in state 9."""
        assert conjunct(entangled_frame, [0, 1]) == frozenset({9})

    def test_conjunct_empty_outcomes(self, two_trit_frame):
        """Test no outcomes leaves the full state set."""
        assert conjunct(two_trit_frame, []) == frozenset(range(1, 10))

    def test_conjunct_too_many_outcomes(self, two_trit_frame):
        """Test more outcomes than partitions is rejected."""
        with pytest.raises(DomainError):
            conjunct(two_trit_frame, [0, 0, 0])

    def test_conjunct_bad_block(self, two_trit_frame):
        """Test unknown block indices are rejected."""
        with pytest.raises(DomainError):
            conjunct(two_trit_frame, [3])

    @given(labelled_pair())
    def test_meet_is_commutative(self, pair):
        """Test meet(p, q) == meet(q, p)."""
        p, q = (Partition.from_labels(labels) for labels in pair)

        assert meet(p, q) == meet(q, p)

    @given(labelled_pair())
    def test_meet_refines_both(self, pair):
        """Test the meet refines each argument."""
        p, q = (Partition.from_labels(labels) for labels in pair)
        joint = meet(p, q)

        assert joint.refines(p)
        assert joint.refines(q)

    @given(labelled_pair())
    def test_meet_is_idempotent(self, pair):
        """Test meet(p, p) == p."""
        p = Partition.from_labels(pair[0])

        assert meet(p, p) == p

    @given(labelled_triple())
    def test_meet_is_associative(self, triple):
        """Test meet(meet(p, q), r) == meet(p, meet(q, r)) == meet_all([p, q, r])."""
        p, q, r = (Partition.from_labels(labels) for labels in triple)

        assert meet(meet(p, q), r) == meet(p, meet(q, r))
        assert meet(meet(p, q), r) == meet_all([p, q, r])
