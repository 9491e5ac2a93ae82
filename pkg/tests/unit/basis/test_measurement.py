"""Unit tests for partitions acting as measurements."""

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from nit_partitions.basis import (
    ExactVector,
    basis_refines,
    diagonal_bases,
    measurement_probabilities,
    standard_basis,
)
from nit_partitions.core.exceptions import DomainError
from nit_partitions.partitions import Partition


class TestBasisRefines:
    """Test basis_refines."""

    def test_diagonal_family_matches_entangled_partition(self, entangled_frame):
        """Test a bijective assignment."""
        first, _ = diagonal_bases(3)

        verdict = basis_refines(list(first), entangled_frame[0])

        assert verdict
        assert verdict.assignment == (0, 1, 2)
        assert verdict.bijective

    def test_standard_basis(self, two_trit_frame):
        """Test unit vectors land in their containing block."""
        verdict = basis_refines(list(standard_basis(3, 2)), two_trit_frame[1])

        assert verdict.assignment == (0, 1, 2, 0, 1, 2, 0, 1, 2)
        assert not verdict.bijective

    def test_straddling(self, two_trit_frame):
        """Test the diagonal family straddles the first trit partition."""
        first, _ = diagonal_bases(3)

        verdict = basis_refines(list(first), two_trit_frame[0])

        assert not verdict.compatible
        assert verdict.straddling == 0
        assert verdict.assignment == ()

    def test_zero_vector(self):
        """Test zero vectors are rejected."""
        with pytest.raises(DomainError, match="zero"):
            basis_refines([ExactVector((0, 0))], Partition.discrete(2))

    def test_dimension_mismatch(self, two_trit_frame):
        """Test vectors must cover the partition's states."""
        with pytest.raises(DomainError):
            basis_refines([ExactVector.unit(4, 1)], two_trit_frame[0])


class TestMeasurementProbabilities:
    """Test measurement_probabilities."""

    def test_unit_state(self, two_trit_frame):
        """Test state 3 under the second trit partition."""
        probs = measurement_probabilities(ExactVector.unit(9, 3), two_trit_frame[1])

        assert probs == (0, 0, 1)

    def test_diagonal_vector_inside_block(self, entangled_frame):
        """Test a diagonal vector passes one filter unchanged."""
        first, _ = diagonal_bases(3)

        assert measurement_probabilities(first[0], entangled_frame[0]) == (1, 0, 0)

    def test_diagonal_vector_spread(self, entangled_frame):
        """Test a diagonal vector spreads evenly over the other family's blocks."""
        first, _ = diagonal_bases(3)
        third = Fraction(1, 3)

        assert measurement_probabilities(first[0], entangled_frame[1]) == (third, third, third)

    def test_unnormalized_state(self, two_trit_frame):
        """Test unnormalized states are rejected."""
        with pytest.raises(DomainError, match="not normalized"):
            measurement_probabilities(ExactVector((1,) * 9, 1), two_trit_frame[0])

    @given(
        st.lists(st.integers(-5, 5), min_size=9, max_size=9),
        st.lists(st.integers(0, 2), min_size=9, max_size=9),
    )
    def test_probabilities_sum_to_one(self, coeffs, labels):
        """Test exact probabilities of any normalized state sum to one."""
        norm_sq = sum(c * c for c in coeffs)
        assume(norm_sq > 0)
        state = ExactVector(tuple(coeffs), norm_sq)
        partition = Partition.from_labels(labels)

        probs = measurement_probabilities(state, partition)

        assert sum(probs) == 1
        assert all(p >= 0 for p in probs)
