"""
Operator core

Exact diagonal nit operators built from partitions and labels, and the
context operator whose distinct spectrum certifies a separating frame.
"""

from .diagonal import (
    DiagonalOperator,
    PrimeLabelSet,
    canonical_nit_operators,
    default_prime_labels,
    frame_from_operators,
    operator_from_partition,
    partition_from_operator,
    permute_columns,
)

from .context import (
    SpectrumVerdict,
    context_operator,
    decode_eigenvalue,
    has_distinct_spectrum,
)

__all__ = [
    # Operators
    "DiagonalOperator",
    "PrimeLabelSet",
    "default_prime_labels",
    "operator_from_partition",
    "partition_from_operator",
    "frame_from_operators",
    "canonical_nit_operators",
    "permute_columns",
    # Context
    "context_operator",
    "SpectrumVerdict",
    "has_distinct_spectrum",
    "decode_eigenvalue",
]
