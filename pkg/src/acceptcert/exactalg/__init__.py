"""Exact arithmetic layer: cyclotomic scalars and exact linear algebra.

The scalar kernels have a compiled (Cython) implementation with a pure-Python
fallback; ``KERNEL_NAME`` says which one is active.  Set ACCEPTCERT_PURE=1
before import to force the fallback.
"""

from .cyclotomic import (
    CONDUCTOR_CAP,
    KERNEL_NAME,
    ConductorCapError,
    CycNum,
    ExactAlgError,
    NotRationalError,
    ONE,
    ZERO,
    cyc_embed,
    cyc_half,
    cyc_i,
    cyc_make,
    cyc_rational,
    cyc_sqrt2,
    cyc_zeta,
    cyclotomic_poly,
    euler_phi,
    prime_factors,
    sqrt_rational,
)
from .linalg import (
    ExactMatrix,
    Subspace,
    char_poly,
    commutant,
    flatten_matrix,
    nullspace,
    rref,
    subspace_intersect,
    unflatten_matrix,
)

__all__ = [
    "CONDUCTOR_CAP",
    "KERNEL_NAME",
    "ConductorCapError",
    "CycNum",
    "ExactAlgError",
    "ExactMatrix",
    "NotRationalError",
    "ONE",
    "ZERO",
    "Subspace",
    "char_poly",
    "commutant",
    "cyc_embed",
    "cyc_half",
    "cyc_i",
    "cyc_make",
    "cyc_rational",
    "cyc_sqrt2",
    "cyc_zeta",
    "cyclotomic_poly",
    "euler_phi",
    "flatten_matrix",
    "nullspace",
    "prime_factors",
    "rref",
    "sqrt_rational",
    "subspace_intersect",
    "unflatten_matrix",
]
