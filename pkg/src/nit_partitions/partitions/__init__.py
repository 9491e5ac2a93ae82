"""
Partition core

States, partitions, frames and permutations: canonical frames, the
separating property, the permutation action, locality and exhaustive
enumeration of small frames.
"""

from .partition import Block, Frame, Partition, conjunct, meet, meet_all

from .permutation import Permutation, parse_cycles

from .frames import (
    Locality,
    SeparationVerdict,
    apply_permutation,
    canonical_frame,
    classify_partition,
    is_equivalent,
    is_separating,
    mapping_permutations,
    orbit_size,
    stabilizer_order,
)

from .enumeration import (
    FrameEnumeration,
    all_partitions,
    balanced_partitions,
    enumerate_separating_frames,
    iter_separating_frames,
)

__all__ = [
    # Values
    "Block",
    "Partition",
    "Frame",
    "Permutation",
    "parse_cycles",
    # Lattice
    "meet",
    "meet_all",
    "conjunct",
    # Frames
    "canonical_frame",
    "SeparationVerdict",
    "is_separating",
    "apply_permutation",
    "mapping_permutations",
    "stabilizer_order",
    "orbit_size",
    "is_equivalent",
    "Locality",
    "classify_partition",
    # Enumeration
    "balanced_partitions",
    "all_partitions",
    "FrameEnumeration",
    "iter_separating_frames",
    "enumerate_separating_frames",
]
