"""Noncrossing and nonnesting partitions of the classical reflection groups.

Typical use::

    from ncnn import GroupFamily, enumerate_classical, convert, NN_TO_NC
    g = GroupFamily("B", 3)
    for p in enumerate_classical(g, "nn"):
        q = convert(g, NN_TO_NC, p)
"""

from .bijection import NC_TO_NN, NN_TO_NC, convert, rebuild, verify_central_theorem
from .errors import NCNNError
from .groups import (
    SignedPermutation,
    absolute_length,
    partition_of_antichain,
    partition_of_element,
    standard_coxeter_element,
    uniform_noncrossing,
)
from .kernels import BACKEND
from .partitions import (
    NC,
    NN,
    ClassicalPartition,
    enumerate_classical,
    is_classical_noncrossing,
    is_classical_nonnesting,
    partition_type,
)
from .roots import GroupFamily, catalan_number, enumerate_antichains
from .statistics import (
    StatisticBundle,
    canonical_basis,
    extract_statistics,
    omega_of,
    validate_statistics,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "NC", "NC_TO_NN", "NN", "NN_TO_NC", "ClassicalPartition", "GroupFamily", "NCNNError",
    "SignedPermutation", "StatisticBundle", "absolute_length", "canonical_basis", "catalan_number",
    "convert", "enumerate_antichains", "enumerate_classical", "extract_statistics",
    "is_classical_noncrossing", "is_classical_nonnesting", "omega_of", "partition_of_antichain",
    "partition_of_element", "partition_type", "rebuild", "standard_coxeter_element",
    "uniform_noncrossing", "validate_statistics", "verify_central_theorem",
]
