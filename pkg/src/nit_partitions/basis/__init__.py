"""
Basis core

Lexicographic product indexing, exact vectors with symbolic
normalization, the diagonal bases of two particles, and partitions
acting as measurements.
"""

from .indexing import ProductLabel, index_from_tuple, tuple_from_index

from .vectors import (
    ExactBasis,
    ExactVector,
    inner_product,
    overlap_sq,
    standard_basis,
)

from .diagonal import (
    diagonal_bases,
    diagonal_support_frame,
    diagonal_vector,
    support_partition,
)

from .measurement import RefinementVerdict, basis_refines, measurement_probabilities

__all__ = [
    # Indexing
    "ProductLabel",
    "index_from_tuple",
    "tuple_from_index",
    # Vectors
    "ExactVector",
    "ExactBasis",
    "inner_product",
    "overlap_sq",
    "standard_basis",
    # Diagonal bases
    "diagonal_vector",
    "diagonal_bases",
    "support_partition",
    "diagonal_support_frame",
    # Measurement
    "RefinementVerdict",
    "basis_refines",
    "measurement_probabilities",
]
