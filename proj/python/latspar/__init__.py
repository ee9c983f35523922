"""Exact-arithmetic lattice sparsifiers and (1+eps)-approximate CVP.

All rationals cross the boundary as strings ("num/den" or integers);
lattice bases are row-major matrices whose columns are the basis vectors;
convex bodies are JSON body specs (dicts or strings).
"""

from latspar._core import (
    InputError,
    InternalError,
    approx_cvp,
    brute_cvp,
    check_cauchy_davenport,
    complement_basis,
    contains,
    count_points,
    cvp_l2,
    dual_basis,
    find_prime,
    gauge,
    gauge_exact,
    good_vector,
    hnf,
    hnf_basis,
    kernel_mod_p,
    lattice_enum,
    lines,
    lll_reduce,
    membership,
    shortest_vectors,
    sparsify,
    sparsify_randomized,
    sublattice_mod,
    svp_l2,
    verify_sparsifier,
)

__all__ = [
    "InputError",
    "InternalError",
    "approx_cvp",
    "brute_cvp",
    "check_cauchy_davenport",
    "complement_basis",
    "contains",
    "count_points",
    "cvp_l2",
    "dual_basis",
    "find_prime",
    "gauge",
    "gauge_exact",
    "good_vector",
    "hnf",
    "hnf_basis",
    "kernel_mod_p",
    "lattice_enum",
    "lines",
    "lll_reduce",
    "membership",
    "shortest_vectors",
    "sparsify",
    "sparsify_randomized",
    "sublattice_mod",
    "svp_l2",
    "verify_sparsifier",
]
