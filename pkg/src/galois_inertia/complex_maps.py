"""Two-valued complex maps ``jbar(x)`` on C^3 and their group law.

The formulas are those of :mod:`galois_inertia.real_maps` continued to
complex moments and parameters. The square root is the principal branch
(``cmath.sqrt``, cut along the negative reals, ``sqrt(-r) = +i sqrt(r)``).
Only one sheet is returned: ``(lambda1, lambda2, lambda3)`` with
``lambda1 ~ (tr - sqrt(delta)) / 2``. The other sheet is its involution, so
results should be compared with :func:`~galois_inertia.core.eq_mod_involution`.
"""
from __future__ import annotations

import cmath
from typing import NamedTuple, Sequence

from .core import DEFAULT_TOLERANCES, NonFiniteError, PoleAtZeroBError


class ComplexMapResult(NamedTuple):
    lambda1: complex
    lambda2: complex
    lambda3: complex


def _finite(z: complex) -> bool:
    return cmath.isfinite(z)


def _discriminant(A: complex, B: complex, C: complex, x: complex, u: complex, v: complex) -> complex:
    # Three algebraically equal splittings of delta; take the one whose two
    # terms are smallest, i.e. loses least to cancellation. For real ordered
    # moments and x >= 0 the first has no cancellation at all, matching the
    # real map exactly.
    w = C - A + x
    tr = A + C + x
    forms = (
        (u * u, v),
        (w * w, -4.0 * A * x * (C - B) / B),
        (tr * tr, -4.0 * A * C * (1.0 + x / B)),
    )
    first, second = min(forms, key=lambda f: abs(f[0]) + abs(f[1]))
    return first + second


def jbar_map(t: Sequence[complex], x: complex, eps_deg: float = DEFAULT_TOLERANCES.eps_deg) -> ComplexMapResult:
    """One representative of ``jbar(x)(A, B, C)``.

    Raises :class:`PoleAtZeroBError` when ``|B|`` is below ``eps_deg`` times the
    largest component modulus, since ``det = A C (1 + x/B)`` has a pole there.
    Branch points (``delta == 0``) are legal and give ``lambda1 == lambda3``.
    """
    A, B, C = (complex(v) for v in t)
    x = complex(x)
    if not all(_finite(v) for v in (A, B, C, x)):
        raise NonFiniteError(f"arguments must be finite, got {(A, B, C)} and x={x}")
    if abs(B) <= eps_deg * max(abs(A), abs(B), abs(C)):
        raise PoleAtZeroBError(f"|B| = {abs(B):g} is too close to the pole at B = 0")

    # The outer pair is (C - m/2, C + p/2) with p = root - u, m = root + u,
    # u = C - A - x and p m = v = 4 C x (B - A) / B. The larger of p, m is
    # formed directly, the smaller as v / larger.
    u = C - A - x
    v = 4.0 * C * x * (B - A) / B
    root = cmath.sqrt(_discriminant(A, B, C, x, u, v))
    p, m = root - u, root + u
    if abs(p) >= abs(m):
        m = v / p if p != 0 else m
    else:
        p = v / m
    hi, lo = C + 0.5 * p, C - 0.5 * m
    det = A * C * (1.0 + x / B)
    # The smaller root of the pair is recovered from the product.
    if abs(hi) >= abs(lo):
        lo = det / hi if hi != 0 else lo
    else:
        hi = det / lo
    return ComplexMapResult(lo, B + x, hi)


def jbar_inverse_apply(t: Sequence[complex], x: complex, eps_deg: float = DEFAULT_TOLERANCES.eps_deg) -> ComplexMapResult:
    """Apply the inverse element ``jbar(-x)``."""
    return jbar_map(t, -complex(x), eps_deg)


def symmetric_functions(t: Sequence[complex]) -> tuple[complex, complex, complex]:
    """``(A + C, A * C, B)``: the single-valued content of a two-valued output."""
    A, B, C = (complex(v) for v in t)
    return A + C, A * C, B
