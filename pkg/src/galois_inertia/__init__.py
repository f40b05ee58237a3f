"""Inertia maps along the Galois axis of a rigid body.

Shifting the reference point along a Galois axis acts on the principal
moments ``(A, B, C)`` through a one-parameter family ``j(x)``, ``x = m d**2``,
that composes additively. This package implements the real semigroup, its
complex two-valued continuation, the extension by scalings, and a geometric
oracle from the full parallel-axis tensor.
"""
from .complex_maps import ComplexMapResult, jbar_inverse_apply, jbar_map
from .core import (
    DEFAULT_TOLERANCES,
    ComplexTriple,
    InertiaError,
    InertiaTriple,
    Tolerances,
    eq_mod_involution,
    involution,
    validate_triple,
)
from .extension import (
    AffineMap,
    ExtendedElement,
    ScalingMap,
    affine_compose,
    ext_apply,
    ext_inverse,
    ext_mul,
    s_apply,
    to_affine,
)
from .geometry import (
    FixedDirection,
    GaloisAxis,
    PrincipalAxis,
    additivity_residual,
    axis_rule_map,
    falsify_search,
    galois_axes,
    maccullagh_residual,
    parse_rule,
    steiner_tensor,
    sym3_eigenvalues,
)
from .real_maps import appendix_identities, delta_extremum, invariants, j_map, jacobian_det

__version__ = "0.1.0"
