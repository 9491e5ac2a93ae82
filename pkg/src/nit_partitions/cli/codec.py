"""
JSON encoding and decoding of every value the command line handles.

Structural integers (states, n, k, sizes, indices) are JSON numbers;
labels, diagonal entries, coefficients and norms are decimal strings so
arbitrary precision survives any JSON reader. Decoders accept both.
"""

import json
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, TextIO

from nit_partitions.basis import ExactVector, RefinementVerdict
from nit_partitions.core.exceptions import CodecError
from nit_partitions.operators import DiagonalOperator, SpectrumVerdict
from nit_partitions.partitions import (
    Frame,
    FrameEnumeration,
    Locality,
    Partition,
    Permutation,
    SeparationVerdict,
)
from nit_partitions.search import (
    Ask,
    ComparisonReport,
    Evaluation,
    Leaf,
    Node,
    Repertoire,
    SearchReport,
    Strategy,
)
from nit_partitions.utils.canonical import (
    decode_int,
    encode_fraction,
    encode_int,
)


_BLOCK_KEY = re.compile(r"[0-9]+")


# ============================================================================
# DOCUMENTS
# ============================================================================

def load_document(path: str, stdin: Optional[TextIO] = None) -> Any:
    """Parse a JSON file; ``-`` reads standard input."""
    try:
        if path == "-":
            return json.load(stdin or sys.stdin)
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as e:
        raise CodecError(f"Cannot read {path}: {e.strerror}", path=path) from e
    except json.JSONDecodeError as e:
        raise CodecError(f"Invalid JSON in {path}: {e.msg} at line {e.lineno}", path=path) from e
    except ValueError as e:
        # undecodable bytes or integers past the digit limit
        raise CodecError(f"Invalid JSON in {path}: {e}", path=path) from e


def _expect(raw: Any, kind: type, path: str) -> Any:
    if not isinstance(raw, kind) or isinstance(raw, bool):
        raise CodecError(
            f"Expected {kind.__name__} at {path}, got {type(raw).__name__}", path=path
        )
    return raw


def _field(raw: Dict[str, Any], key: str, path: str) -> Any:
    if key not in raw:
        raise CodecError(f"Missing key '{key}' at {path}", path=path)
    return raw[key]


def _structural_int(raw: Any, path: str) -> int:
    return _expect(raw, int, path)


def _int_list(raw: Any, path: str) -> List[int]:
    return [_structural_int(v, f"{path}[{i}]") for i, v in enumerate(_expect(raw, list, path))]


# ============================================================================
# PARTITIONS
# ============================================================================

def encode_partition(partition: Partition) -> List[List[int]]:
    return partition.to_list()


def decode_partition(raw: Any, path: str = "partition") -> Partition:
    blocks = [_int_list(b, f"{path}[{i}]") for i, b in enumerate(_expect(raw, list, path))]
    return Partition.from_blocks(blocks)


def encode_frame(frame: Frame) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "n": frame.n,
        "k": frame.k,
        "partitions": [encode_partition(p) for p in frame.partitions],
    }
    if not frame.balanced:
        data["balanced"] = False
    return data


def decode_frame(raw: Any, path: str = "frame") -> Frame:
    raw = _expect(raw, dict, path)
    partitions = [
        decode_partition(p, f"{path}.partitions[{i}]")
        for i, p in enumerate(_expect(_field(raw, "partitions", path), list, f"{path}.partitions"))
    ]
    balanced = raw.get("balanced", True)
    if not isinstance(balanced, bool):
        raise CodecError(f"Expected bool at {path}.balanced", path=f"{path}.balanced")
    return Frame(
        _structural_int(_field(raw, "n", path), f"{path}.n"),
        _structural_int(_field(raw, "k", path), f"{path}.k"),
        tuple(partitions),
        balanced=balanced,
    )


def decode_partitions(raw: Any, path: str = "document") -> List[Partition]:
    """A frame document or a bare array of partitions."""
    if isinstance(raw, dict):
        return list(decode_frame(raw, path).partitions)
    return [decode_partition(p, f"{path}[{i}]") for i, p in enumerate(_expect(raw, list, path))]


def encode_permutation(permutation: Permutation) -> Dict[str, Any]:
    return {
        "size": permutation.size,
        "images": list(permutation.images),
        "cycles": permutation.cycles(),
    }


def decode_permutation(raw: Any, path: str = "permutation") -> Permutation:
    """``images`` takes precedence; otherwise ``cycles`` with ``size``."""
    raw = _expect(raw, dict, path)
    size = _structural_int(_field(raw, "size", path), f"{path}.size")
    if "images" in raw:
        return Permutation(size, tuple(_int_list(raw["images"], f"{path}.images")))
    cycles = _expect(_field(raw, "cycles", path), str, f"{path}.cycles")
    return Permutation.from_cycles(cycles, size)


def encode_verdict(verdict: SeparationVerdict) -> Dict[str, Any]:
    return {
        "separating": verdict.separating,
        "witness": None if verdict.witness is None else list(verdict.witness),
        "witness_blocks": [list(b) for b in verdict.witness_blocks],
        "witness_states": sorted(verdict.witness_states),
        "first_gap": None if verdict.first_gap is None else list(verdict.first_gap),
        "collision_count": verdict.collision_count,
        "gap_count": verdict.gap_count,
    }


def encode_locality(locality: Locality) -> Dict[str, Any]:
    if not locality.local:
        return {"local": False}
    assert locality.relabeling is not None
    return {
        "local": True,
        "particle": locality.particle,
        "relabeling": list(locality.relabeling),
    }


def encode_enumeration(enumeration: FrameEnumeration) -> Dict[str, Any]:
    return {
        "n": enumeration.n,
        "k": enumeration.k,
        "count": enumeration.count,
        "frames": [encode_frame(f) for f in enumeration.frames],
    }


# ============================================================================
# OPERATORS
# ============================================================================

def encode_operator(operator: DiagonalOperator) -> Dict[str, Any]:
    return {"diag": [encode_int(v) for v in operator.diag]}


def decode_operator(raw: Any, path: str = "operator") -> DiagonalOperator:
    raw = _expect(raw, dict, path)
    entries = _expect(_field(raw, "diag", path), list, f"{path}.diag")
    return DiagonalOperator(
        tuple(decode_int(v, path=f"{path}.diag[{i}]") for i, v in enumerate(entries))
    )


def decode_operators(raw: Any, path: str = "document") -> List[DiagonalOperator]:
    """One operator document or an array of them."""
    if isinstance(raw, list):
        return [decode_operator(op, f"{path}[{i}]") for i, op in enumerate(raw)]
    return [decode_operator(raw, path)]


def encode_spectrum(verdict: SpectrumVerdict) -> Dict[str, Any]:
    return {
        "distinct": verdict.distinct,
        "collision": None if verdict.collision is None else list(verdict.collision),
    }


# ============================================================================
# VECTORS
# ============================================================================

def encode_vector(vector: ExactVector) -> Dict[str, Any]:
    return {
        "coeffs": [encode_int(c) for c in vector.coeffs],
        "norm_sq": encode_int(vector.norm_sq),
    }


def decode_vector(raw: Any, path: str = "vector") -> ExactVector:
    raw = _expect(raw, dict, path)
    coeffs = _expect(_field(raw, "coeffs", path), list, f"{path}.coeffs")
    return ExactVector(
        tuple(decode_int(c, path=f"{path}.coeffs[{i}]") for i, c in enumerate(coeffs)),
        decode_int(_field(raw, "norm_sq", path), path=f"{path}.norm_sq"),
    )


def encode_vectors(vectors: Sequence[ExactVector]) -> List[Dict[str, Any]]:
    return [encode_vector(v) for v in vectors]


def decode_vectors(raw: Any, path: str = "document") -> List[ExactVector]:
    """An array of vectors, or a ``families`` document read family by family."""
    if isinstance(raw, dict) and "families" in raw:
        families = _expect(raw["families"], list, f"{path}.families")
        return [
            decode_vector(v, f"{path}.families[{f}][{i}]")
            for f, family in enumerate(families)
            for i, v in enumerate(_expect(family, list, f"{path}.families[{f}]"))
        ]
    if isinstance(raw, dict):
        return [decode_vector(raw, path)]
    return [decode_vector(v, f"{path}[{i}]") for i, v in enumerate(_expect(raw, list, path))]


def encode_refinement(verdict: RefinementVerdict) -> Dict[str, Any]:
    return {
        "compatible": verdict.compatible,
        "assignment": list(verdict.assignment),
        "straddling": verdict.straddling,
        "bijective": verdict.bijective,
    }


def encode_fractions(values: Sequence[Fraction]) -> List[Dict[str, str]]:
    return [encode_fraction(v) for v in values]


# ============================================================================
# SEARCH
# ============================================================================

def encode_repertoire(repertoire: Repertoire) -> Dict[str, Any]:
    return {
        "ground_size": repertoire.ground_size,
        "questions": [encode_partition(q) for q in repertoire.questions],
    }


def decode_repertoire(raw: Any, path: str = "repertoire") -> Repertoire:
    """A repertoire document, or a frame whose partitions become the questions."""
    raw = _expect(raw, dict, path)
    if "partitions" in raw:
        return Repertoire.from_frame(decode_frame(raw, path))
    size = _structural_int(_field(raw, "ground_size", path), f"{path}.ground_size")
    questions = _expect(_field(raw, "questions", path), list, f"{path}.questions")
    return Repertoire(
        size,
        tuple(decode_partition(q, f"{path}.questions[{i}]") for i, q in enumerate(questions)),
    )


def encode_node(node: Node) -> Dict[str, Any]:
    if isinstance(node, Leaf):
        return {"leaf": list(node.candidates)}
    return {
        "ask": node.question,
        "children": {str(block): encode_node(child) for block, child in node.children},
    }


def decode_node(raw: Any, path: str = "tree") -> Node:
    raw = _expect(raw, dict, path)
    if "leaf" in raw:
        return Leaf(tuple(_int_list(raw["leaf"], f"{path}.leaf")))
    question = _structural_int(_field(raw, "ask", path), f"{path}.ask")
    children = _expect(_field(raw, "children", path), dict, f"{path}.children")
    decoded = []
    for key, child in children.items():
        if not _BLOCK_KEY.fullmatch(key):
            raise CodecError(f"Child key {key!r} is not a block index", path=f"{path}.children")
        block = decode_int(key, f"{path}.children")
        decoded.append((block, decode_node(child, f"{path}.children.{key}")))
    return Ask(question, tuple(decoded))


def encode_strategy(strategy: Strategy) -> Dict[str, Any]:
    return {
        "ground_size": strategy.ground_size,
        "questions": [encode_partition(q) for q in strategy.questions],
        "tree": encode_node(strategy.root),
    }


def decode_strategy(raw: Any, path: str = "strategy") -> Strategy:
    """A strategy document, or a planner result holding one under ``strategy``."""
    raw = _expect(raw, dict, path)
    if "strategy" in raw:
        return decode_strategy(raw["strategy"], f"{path}.strategy")
    size = _structural_int(_field(raw, "ground_size", path), f"{path}.ground_size")
    questions = _expect(_field(raw, "questions", path), list, f"{path}.questions")
    return Strategy(
        size,
        tuple(decode_partition(q, f"{path}.questions[{i}]") for i, q in enumerate(questions)),
        decode_node(_field(raw, "tree", path), f"{path}.tree"),
    )


def encode_report(report: SearchReport) -> Dict[str, Any]:
    return {
        "separating": report.separating,
        "worst_case": report.worst_case_depth,
        "expected": None
        if report.expected_queries is None
        else encode_fraction(report.expected_queries),
        "residual": [list(r) for r in report.residual],
    }


def encode_evaluation(evaluation: Evaluation) -> Dict[str, Any]:
    return {
        "transcript": [
            {"question": step.question, "block": step.block, "states": list(step.states)}
            for step in evaluation.transcript
        ],
        "identified": evaluation.identified,
        "residual": list(evaluation.residual),
    }


def encode_comparison(report: ComparisonReport) -> Dict[str, Any]:
    return {
        "baseline": encode_report(report.baseline),
        "other": encode_report(report.other),
        "depth_difference": report.depth_difference,
        "expected_difference": None
        if report.expected_difference is None
        else encode_fraction(report.expected_difference),
        "other_inferior": report.other_inferior,
        "equal": report.equal,
    }


__all__ = [
    "load_document",
    "encode_partition",
    "decode_partition",
    "decode_partitions",
    "encode_frame",
    "decode_frame",
    "encode_permutation",
    "decode_permutation",
    "encode_verdict",
    "encode_locality",
    "encode_enumeration",
    "encode_operator",
    "decode_operator",
    "decode_operators",
    "encode_spectrum",
    "encode_vector",
    "decode_vector",
    "encode_vectors",
    "decode_vectors",
    "encode_refinement",
    "encode_fractions",
    "encode_repertoire",
    "decode_repertoire",
    "encode_node",
    "decode_node",
    "encode_strategy",
    "decode_strategy",
    "encode_report",
    "encode_evaluation",
    "encode_comparison",
]
