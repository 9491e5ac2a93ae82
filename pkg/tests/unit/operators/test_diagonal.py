"""Unit tests for diagonal nit operators."""

import pytest

from nit_partitions.core.exceptions import DomainError
from nit_partitions.operators import (
    DiagonalOperator,
    PrimeLabelSet,
    canonical_nit_operators,
    default_prime_labels,
    frame_from_operators,
    operator_from_partition,
    partition_from_operator,
    permute_columns,
)
from nit_partitions.partitions import (
    Partition,
    Permutation,
    apply_permutation,
    canonical_frame,
)


class TestDiagonalOperator:
    """Test DiagonalOperator and PrimeLabelSet."""

    def test_spectrum_in_first_appearance_order(self):
        """Test distinct entries keep their order."""
        assert DiagonalOperator((5, 2, 5, 3)).spectrum == (5, 2, 3)

    def test_empty_rejected(self):
        """Test an operator needs entries."""
        with pytest.raises(DomainError):
            DiagonalOperator(())

    def test_non_integer_rejected(self):
        """Test entries must be integers."""
        with pytest.raises(DomainError):
            DiagonalOperator((2, 2.5))

    def test_prime_label_set(self):
        """Test label sets hold distinct primes."""
        assert len(PrimeLabelSet((2, 3, 5))) == 3

    @pytest.mark.parametrize("primes", [(2, 4), (3, 3), ()])
    def test_bad_label_sets(self, primes):
        """Test composite, repeated or missing labels."""
        with pytest.raises(DomainError):
            PrimeLabelSet(primes)

    def test_default_labels(self):
        """Test consecutive primes n per observable."""
        labels = default_prime_labels(3, 2)

        assert [ls.primes for ls in labels] == [(2, 3, 5), (7, 11, 13)]
        assert all(type(q) is int for ls in labels for q in ls.primes)


class TestOperatorFromPartition:
    """Test the partition to operator correspondence."""

    def test_first_trit(self, two_trit_frame):
        """Test F1 with (2, 3, 5)."""
        op = operator_from_partition(two_trit_frame[0], [2, 3, 5])

        assert op.diag == (2, 2, 2, 3, 3, 3, 5, 5, 5)

    def test_discrete(self):
        """Test the fine grained partition gives the labels themselves."""
        assert operator_from_partition(Partition.discrete(3), [7, 11, 13]).diag == (7, 11, 13)

    def test_unbalanced(self, unbalanced_partition):
        """Test the unbalanced partition with (2, 3, 5)."""
        op = operator_from_partition(unbalanced_partition, [2, 3, 5])

        assert op.diag == (2, 3, 3, 5, 5, 5, 5, 5, 5)

    def test_label_count_must_match(self, two_trit_frame):
        """Test one label per block."""
        with pytest.raises(DomainError):
            operator_from_partition(two_trit_frame[0], [2, 3])

    def test_labels_must_be_distinct(self, two_trit_frame):
        """Test repeated labels are rejected."""
        with pytest.raises(DomainError):
            operator_from_partition(two_trit_frame[0], [2, 2, 5])

    def test_level_sets(self, two_trit_frame):
        """Test diag(2,2,2,3,3,3,5,5,5) gives F1."""
        op = DiagonalOperator((2, 2, 2, 3, 3, 3, 5, 5, 5))

        assert partition_from_operator(op) == two_trit_frame[0]
        assert op.level_sets() == two_trit_frame[0]

    def test_constant_diag(self):
        """Test a constant diagonal has one level set."""
        assert partition_from_operator(DiagonalOperator((4, 4, 4))) == Partition.trivial(3)

    def test_distinct_diag(self):
        """Test distinct entries give singletons."""
        op = DiagonalOperator((14, 22, 26, 21, 33, 39, 35, 55, 65))

        assert partition_from_operator(op) == Partition.discrete(9)

    def test_round_trip(self, entangled_frame):
        """Test level sets recover the partition."""
        for partition in entangled_frame:
            op = operator_from_partition(partition, [2, 3, 5])
            assert partition_from_operator(op) == partition


class TestCanonicalNitOperators:
    """Test canonical_nit_operators."""

    def test_two_trits(self):
        """Test n=3, k=2 with (2,3,5) and (7,11,13)."""
        first, second = canonical_nit_operators(3, 2, labels=[(2, 3, 5), (7, 11, 13)])

        assert first.diag == (2, 2, 2, 3, 3, 3, 5, 5, 5)
        assert second.diag == (7, 11, 13, 7, 11, 13, 7, 11, 13)

    def test_default_labels_match(self):
        """Test default labels are the consecutive primes."""
        assert canonical_nit_operators(3, 2) == canonical_nit_operators(
            3, 2, labels=[(2, 3, 5), (7, 11, 13)]
        )

    def test_single_bit(self):
        """Test n=2, k=1 with (2, 3)."""
        (op,) = canonical_nit_operators(2, 1, labels=[(2, 3)])

        assert op.diag == (2, 3)

    def test_three_bits(self):
        """Test the runs for n=2, k=3."""
        ops = canonical_nit_operators(2, 3, labels=[(2, 3), (5, 7), (11, 13)])

        assert ops[0].diag == (2, 2, 2, 2, 3, 3, 3, 3)
        assert ops[1].diag == (5, 5, 7, 7, 5, 5, 7, 7)
        assert ops[2].diag == (11, 13, 11, 13, 11, 13, 11, 13)

    def test_level_sets_are_canonical_frame(self):
        """Test the operators realize canonical_frame."""
        ops = canonical_nit_operators(3, 3)

        assert frame_from_operators(ops, 3, 3) == canonical_frame(3, 3)

    def test_shared_primes_rejected(self):
        """Test primes shared between observables need require_disjoint=False."""
        with pytest.raises(DomainError):
            canonical_nit_operators(2, 2, labels=[(2, 3), (3, 5)])

        ops = canonical_nit_operators(2, 2, labels=[(2, 3), (3, 5)], require_disjoint=False)
        assert ops[1].diag == (3, 5, 3, 5)

    def test_wrong_label_set_count(self):
        """Test one label set per observable."""
        with pytest.raises(DomainError):
            canonical_nit_operators(2, 2, labels=[(2, 3)])

    def test_wrong_label_set_size(self):
        """Test n primes per label set."""
        with pytest.raises(DomainError):
            canonical_nit_operators(2, 2, labels=[(2, 3, 5), (7, 11)])


class TestPermuteColumns:
    """Test permute_columns."""

    def test_matches_frame_action(self, quoted_cycle):
        """Test permuting columns permutes the level sets."""
        ops = canonical_nit_operators(3, 2)
        frame = canonical_frame(3, 2)

        moved = frame_from_operators(permute_columns(ops, quoted_cycle), 3, 2)

        assert moved == apply_permutation(frame, quoted_cycle)

    def test_column_moves_to_image(self):
        """Test column s lands at position p(s)."""
        op = DiagonalOperator((2, 3, 5))

        (moved,) = permute_columns([op], Permutation(3, (2, 3, 1)))

        assert moved.diag == (5, 2, 3)

    def test_size_mismatch(self):
        """Test sizes must match."""
        with pytest.raises(DomainError):
            permute_columns([DiagonalOperator((2, 3))], Permutation.identity(3))
