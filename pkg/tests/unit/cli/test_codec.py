"""Unit tests for JSON encoding and decoding."""

import io
import json
import sys

import pytest

from nit_partitions.basis import diagonal_bases
from nit_partitions.cli import codec
from nit_partitions.core.exceptions import CodecError, DomainError
from nit_partitions.operators import DiagonalOperator
from nit_partitions.partitions import Frame, Partition
from nit_partitions.search import Repertoire, SearchReport, optimal_strategy, plan_canonical


class TestDocuments:
    """Test load_document."""

    def test_reads_stdin(self):
        """Test '-' reads the given stream."""
        assert codec.load_document("-", stdin=io.StringIO('{"a": 1}')) == {"a": 1}

    def test_missing_file(self, tmp_path):
        """Test unreadable files raise CodecError."""
        with pytest.raises(CodecError, match="Cannot read"):
            codec.load_document(str(tmp_path / "absent.json"))

    def test_invalid_json(self, tmp_path):
        """Test malformed JSON raises CodecError."""
        path = tmp_path / "bad.json"
        path.write_text("{not json")

        with pytest.raises(CodecError, match="Invalid JSON"):
            codec.load_document(str(path))

    @pytest.mark.skipif(
        not hasattr(sys, "get_int_max_str_digits"), reason="no integer digit limit"
    )
    def test_number_past_digit_limit(self, tmp_path):
        """Test over-long JSON numbers raise CodecError."""
        path = tmp_path / "long.json"
        path.write_text("[" + "9" * 5000 + "]")

        with pytest.raises(CodecError, match="Invalid JSON"):
            codec.load_document(str(path))


class TestFrames:
    """Test partition, frame and permutation documents."""

    def test_encode_frame(self, two_trit_frame):
        """Test the frame document layout."""
        assert codec.encode_frame(two_trit_frame) == {
            "n": 3,
            "k": 2,
            "partitions": [
                [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
                [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
            ],
        }

    def test_unbalanced_flag_survives(self, unbalanced_partition, two_trit_frame):
        """Test balanced=false is written and read back."""
        frame = Frame(3, 2, (unbalanced_partition, two_trit_frame[1]), balanced=False)

        document = codec.encode_frame(frame)

        assert document["balanced"] is False
        assert codec.decode_frame(document) == frame

    def test_balanced_must_be_bool(self, two_trit_frame):
        """Test a non boolean balanced flag."""
        document = dict(codec.encode_frame(two_trit_frame), balanced="no")

        with pytest.raises(CodecError, match="balanced"):
            codec.decode_frame(document)

    def test_missing_key(self):
        """Test missing keys name the path."""
        with pytest.raises(CodecError) as info:
            codec.decode_frame({"k": 1, "partitions": [[[1], [2]]]})

        assert info.value.path == "frame"

    def test_booleans_are_not_states(self):
        """Test true is not accepted as state 1."""
        with pytest.raises(CodecError):
            codec.decode_partition([[True], [2]])

    def test_invalid_partition_is_domain_error(self):
        """Test well formed JSON with overlapping blocks."""
        with pytest.raises(DomainError):
            codec.decode_partition([[1, 2], [2]])

    def test_partitions_from_array(self, two_trit_frame):
        """Test a bare array of partitions."""
        raw = [[[1, 2, 3], [4, 5, 6], [7, 8, 9]]]

        assert codec.decode_partitions(raw) == [two_trit_frame[0]]

    def test_permutation_from_cycles(self, quoted_cycle):
        """Test permutations given by cycles."""
        raw = {"size": 9, "cycles": "(1)(2,9,3,5)(4,6,7,8)"}

        assert codec.decode_permutation(raw) == quoted_cycle

    def test_encode_permutation(self, quoted_cycle):
        """Test images and cycles are both written."""
        document = codec.encode_permutation(quoted_cycle)

        assert document["cycles"] == "(1)(2,9,3,5)(4,6,7,8)"
        assert codec.decode_permutation(document) == quoted_cycle


class TestValues:
    """Test operator and vector documents."""

    def test_operator_entries_are_strings(self):
        """Test diagonal entries travel as decimal strings."""
        assert codec.encode_operator(DiagonalOperator((2, 3))) == {"diag": ["2", "3"]}

    def test_decode_operator_accepts_numbers(self):
        """Test numbers and strings are both read."""
        assert codec.decode_operator({"diag": ["2", 3]}).diag == (2, 3)

    def test_decode_operators_array(self):
        """Test an array of operators."""
        ops = codec.decode_operators([{"diag": ["2"]}, {"diag": ["3"]}])

        assert [op.diag for op in ops] == [(2,), (3,)]

    def test_vector_document(self):
        """Test vector layout."""
        first, _ = diagonal_bases(3)

        assert codec.encode_vector(first[0]) == {
            "coeffs": ["1", "0", "0", "0", "1", "0", "0", "0", "1"],
            "norm_sq": "3",
        }

    def test_families_document(self):
        """Test families are concatenated in order."""
        first, second = diagonal_bases(3)
        document = {"families": [codec.encode_vectors(first), codec.encode_vectors(second)]}

        vectors = codec.decode_vectors(document)

        assert vectors == [*first, *second]

    def test_single_vector_document(self):
        """Test one vector object."""
        assert len(codec.decode_vectors({"coeffs": ["1"], "norm_sq": "1"})) == 1


class TestSearchDocuments:
    """Test strategy and report documents."""

    def test_strategy_round_trip(self, two_trit_frame):
        """Test a planned strategy reads back identically."""
        plan = plan_canonical(two_trit_frame)

        assert codec.decode_strategy(codec.encode_strategy(plan)) == plan

    def test_strategy_from_planner_output(self, two_trit_frame):
        """Test strategies nested under 'strategy'."""
        plan = plan_canonical(two_trit_frame)

        assert codec.decode_strategy({"strategy": codec.encode_strategy(plan)}) == plan

    def test_tree_layout(self):
        """Test ask and leaf nodes."""
        frame = Frame(2, 1, (Partition.discrete(2),))

        document = codec.encode_strategy(plan_canonical(frame))

        assert document["tree"] == {"ask": 0, "children": {"0": {"leaf": [1]}, "1": {"leaf": [2]}}}

    def test_bad_child_key(self):
        """Test child keys must be block indices."""
        with pytest.raises(CodecError, match="block index"):
            codec.decode_node({"ask": 0, "children": {"x": {"leaf": [1]}}})

    @pytest.mark.parametrize("key", ["\u00b2", "-1", " 1"])
    def test_child_key_must_be_plain_digits(self, key):
        """Test only ASCII decimal keys name blocks."""
        with pytest.raises(CodecError, match="block index"):
            codec.decode_node({"ask": 0, "children": {key: {"leaf": [1]}}})

    def test_repertoire_from_frame(self, two_trit_frame):
        """Test frames are accepted as repertoires."""
        raw = codec.encode_frame(two_trit_frame)

        assert codec.decode_repertoire(raw) == Repertoire.from_frame(two_trit_frame)

    def test_repertoire_document(self, unbalanced_partition):
        """Test explicit repertoire documents."""
        repertoire = Repertoire(9, (unbalanced_partition,))

        assert codec.decode_repertoire(codec.encode_repertoire(repertoire)) == repertoire

    def test_report_layout(self, two_trit_frame):
        """Test the separating report."""
        _, report = optimal_strategy(Repertoire.from_frame(two_trit_frame))

        assert codec.encode_report(report) == {
            "separating": True,
            "worst_case": 2,
            "expected": {"num": "2", "den": "1"},
            "residual": [],
        }

    def test_non_separating_report_layout(self):
        """Test the residual report."""
        report = SearchReport(False, residual=((4, 7), (5, 8)))

        assert codec.encode_report(report) == {
            "separating": False,
            "worst_case": None,
            "expected": None,
            "residual": [[4, 7], [5, 8]],
        }

    def test_documents_are_json(self, two_trit_frame):
        """Test encoded documents are plain JSON."""
        plan = plan_canonical(two_trit_frame)

        assert json.loads(json.dumps(codec.encode_strategy(plan)))["ground_size"] == 9
