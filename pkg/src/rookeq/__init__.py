"""Criteria for rook equivalence of Ferrers boards."""

__version__ = "0.1.0"

from rookeq.errors import (
    InvalidPartitionError,
    InvalidTransformError,
    NotEquivalentError,
    PreconditionError,
    RookeqError,
)
from rookeq.partition import (
    Box,
    Partition,
    conjugate,
    durfee_rank,
    merge_rows,
    parse_partition,
    pointwise_sum,
    render_diagram,
)
from rookeq.rook import (
    MSignature,
    RookClass,
    enumerate_partitions,
    m_signature,
    rook_classes,
    rook_equivalent,
    rook_numbers,
    strict_normal_form,
)
from rookeq.salient import (
    LSequence,
    SSignature,
    l_weight,
    max_nested_weight,
    nested_equivalent,
    s_signature,
    salient_rows,
    staircase_rank,
    w_vector,
)
from rookeq.transforms import TransformStep, i1_class, i1_path, ij_transform, valid_i1_rows
from rookeq.wilf import (
    ContainmentWitness,
    ExtensionPair,
    contains,
    count_containing,
    count_containing_top,
    distinguishing_weight,
    enumerate_extensions,
    extend,
    wilf_equivalent_up_to,
)
