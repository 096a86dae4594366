"""Maximum Minimal Vertex Cover: exact solving, kernels with size bounds on
H-free graph classes, clique/independent-set partitions, the kernel to
approximation pipeline and the Monotone SAT reduction."""

from __future__ import annotations

__version__ = "0.1.0"

from mmvc.cover import (
    complete_and_minimalize,
    extend_nbhd_to_minimal_vc,
    greedy_minimal_vc,
    is_minimal_vc,
    is_vertex_cover,
    mmvc_exact,
)
from mmvc.eh import (
    EhPartition,
    Extractor,
    HomogeneousSet,
    Kind,
    brute_optimal_extract,
    eh_partition,
    paw_olariu_extract,
    ramsey_is_extract,
)
from mmvc.graph import Graph
from mmvc.kernels import (
    ClassBound,
    DecidedNo,
    DecidedYes,
    MmvcInstance,
    Reduced,
    clique_neighborhood_diagnostic,
    kernel_colored,
    kernel_general,
    kernel_hfree,
    kernel_k1t,
    mis_ktfree_lop_kernel,
)
from mmvc.patterns import Pattern, find_induced

__all__ = [
    "ClassBound", "DecidedNo", "DecidedYes", "EhPartition", "Extractor", "Graph",
    "HomogeneousSet", "Kind", "MmvcInstance", "Pattern", "Reduced", "brute_optimal_extract",
    "clique_neighborhood_diagnostic", "complete_and_minimalize", "eh_partition",
    "extend_nbhd_to_minimal_vc", "find_induced", "greedy_minimal_vc", "is_minimal_vc",
    "is_vertex_cover", "kernel_colored", "kernel_general", "kernel_hfree", "kernel_k1t",
    "mis_ktfree_lop_kernel", "mmvc_exact", "paw_olariu_extract", "ramsey_is_extract",
]
