"""The real one-parameter semigroup ``j(x)`` acting on ordered moments.

Shifting the reference point a distance ``d`` along a Galois axis maps the
principal moments ``(A, B, C)`` at the centre of mass to

    (A_x, B + x, C_x),   x = d**2,

where ``A_x < C_x`` are the eigenvalues of the 2x2 block ``K(x)`` spanned by
the first and third principal directions:

    tr    = A + C + x
    det   = A * C * (1 + x / B)
    delta = tr**2 - 4 * det
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .core import (
    DEFAULT_TOLERANCES,
    InertiaTriple,
    NegativeParameterError,
    NonFiniteError,
    OrderingViolationError,
    as_inertia_triple,
)


class InvariantScalars(NamedTuple):
    tr: float
    det: float
    delta: float


@dataclass(frozen=True)
class ExtremumReport:
    x_min: float
    delta_min: float


def _check_parameter(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteError(f"parameter must be finite, got {x!r}")
    if x < 0.0:
        raise NegativeParameterError(f"the real map is only defined for x >= 0, got {x!r}")
    return x


def invariants(t: Sequence[float], x: float) -> InvariantScalars:
    """Trace, determinant and discriminant of ``K(x)``.

    Defined for any finite ``x``, including negative values (the discriminant
    minimum sits at a negative ``x``).
    """
    A, B, C = as_inertia_triple(t)
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteError(f"parameter must be finite, got {x!r}")
    tr = A + C + x
    det = A * C * (1.0 + x / B)
    return InvariantScalars(tr, det, tr * tr - 4.0 * det)


def _outer_pair(A: float, B: float, C: float, x: float) -> tuple[float, float]:
    # delta = u**2 + v with u = C - A - x and v = 4 C x (B - A) / B >= 0, so
    # sqrt(delta) >= |u| and p = sqrt(delta) - u >= 0 is formed without
    # cancellation (via v / (sqrt(delta) + u) when u > 0). The large root is
    # C + p/2; the small one comes from the product, det / large root.
    u = C - A - x
    v = 4.0 * C * x * (B - A) / B
    root = math.sqrt(u * u + v)
    p = v / (root + u) if u > 0.0 else root - u
    hi = C + 0.5 * p
    return A * C * (1.0 + x / B) / hi, hi


def stable_delta(A: float, B: float, C: float, x: float) -> float:
    """The discriminant as ``(C - A - x)**2 + 4 C x (B - A) / B``.

    Algebraically equal to ``tr**2 - 4 det`` but a sum of two non-negative
    terms for ordered triples and ``x >= 0``, so it keeps full relative
    accuracy where ``tr**2 - 4 det`` cancels.
    """
    u = C - A - x
    return u * u + 4.0 * C * x * (B - A) / B


def _round_root(c: float, tr: Fraction, det: Fraction, increasing: bool) -> float:
    # Move c to the float nearest the exact root of z**2 - tr z + det, by the
    # sign of the quadratic at the half-way points to c's neighbours; the
    # quadratic is monotone there (increasing at the larger root).
    def q(z: Fraction) -> Fraction:
        return z * (z - tr) + det

    for _ in range(64):
        below, above = math.nextafter(c, -math.inf), math.nextafter(c, math.inf)
        q_lo = q((Fraction(c) + Fraction(below)) / 2)
        q_hi = q((Fraction(c) + Fraction(above)) / 2)
        if (q_lo > 0) if increasing else (q_lo < 0):
            c = below
        elif (q_hi < 0) if increasing else (q_hi > 0):
            c = above
        else:
            return c
    raise ArithmeticError("root rounding did not converge")


def j_map(t: Sequence[float], x: float, correctly_rounded: bool = False) -> InertiaTriple:
    """Apply ``j(x)`` to an ordered triple, ``x >= 0``.

    >>> j_map((1.0, 2.0, 4.0), 0.0)
    InertiaTriple(A=1.0, B=2.0, C=4.0)

    The result is not sorted. Its order ``0 < A_x < B + x < C_x`` is a
    theorem, and is asserted here (4 ulp slack) so that a formula regression
    raises instead of being silently reordered.

    The plain float evaluation is accurate to a few ulp. With
    ``correctly_rounded=True`` the outer pair is moved to the floats nearest
    the exact eigenvalues (for the given float inputs), using exact rational
    sign tests; this is slower and meant for printed output.
    """
    t = as_inertia_triple(t)
    x = _check_parameter(x)
    lo, hi = _outer_pair(*t, x)
    if correctly_rounded:
        A, B, C = (Fraction(v) for v in t)
        tr = A + C + Fraction(x)
        det = A * C * (1 + Fraction(x) / B)
        lo = _round_root(lo, tr, det, increasing=False)
        hi = _round_root(hi, tr, det, increasing=True)
    mid = t.B + x
    slack = 4.0 * math.ulp(mid)
    if not (lo > 0.0 and lo < mid + slack and mid < hi + slack):
        raise OrderingViolationError(f"j({x!r}) of {tuple(t)} gave out-of-order ({lo!r}, {mid!r}, {hi!r})")
    return InertiaTriple(lo, mid, hi)


def jacobian_det(t: Sequence[float], x: float) -> float:
    """Determinant of ``d j(x)(A, B, C) / d(A, B, C)`` at fixed ``x``."""
    A, B, C = as_inertia_triple(t)
    x = _check_parameter(x)
    return (C - A) * (1.0 + x / B) / math.sqrt(stable_delta(A, B, C, x))


def delta_extremum(t: Sequence[float]) -> ExtremumReport:
    """Minimiser of the discriminant over real ``x`` and its value.

    ``x_min = 2AC/B - A - C`` and ``delta_min = 4AC(B - A)(C - B)/B**2``;
    the minimum is positive on ordered triples, so ``delta > 0`` everywhere.
    """
    A, B, C = as_inertia_triple(t)
    x_min = 2.0 * A * C / B - A - C
    delta_min = 4.0 * A * C * (B - A) * (C - B) / (B * B)
    return ExtremumReport(x_min, delta_min)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    triple: InertiaTriple
    x: float
    checks: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _rel(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


def appendix_identities(t: Sequence[float], x: float, tol: float = DEFAULT_TOLERANCES.eps_id) -> IdentityReport:
    """Evaluate the closure inequalities and identities behind ``j(x)``.

    Checks, each against ``tol``:

    * ``delta_positive``: the discriminant is positive.
    * ``d_squared_minus_delta``: with ``D = tr - 2(B + x)``,
      ``D**2 - delta == -4 (B + x)(B - A)(C - B) / B``. The left side is a
      polynomial in the inputs and is evaluated exactly in rationals, so the
      residual is relative to the right side and free of cancellation.
    * ``outer_sum`` / ``outer_product``: ``A_x + C_x == tr`` and
      ``A_x * C_x == det``.
    * ``ordered``: ``0 < A_x < B_x < C_x``.
    """
    t = as_inertia_triple(t)
    x = _check_parameter(x)
    A, B, C = t
    tr, det, delta = invariants(t, x)
    lo, mid, hi = j_map(t, x)

    fA, fB, fC, fx = map(Fraction, (A, B, C, x))
    f_tr = fA + fC + fx
    f_delta = f_tr * f_tr - 4 * fA * fC * (1 + fx / fB)
    f_d = f_tr - 2 * (fB + fx)
    lhs = f_d * f_d - f_delta
    rhs = -4 * (B + x) * (B - A) * (C - B) / B
    d2_res = abs(float(lhs) - rhs) / abs(rhs)

    checks = (
        IdentityCheck("delta_positive", delta, delta > 0.0),
        IdentityCheck("d_squared_minus_delta", d2_res, d2_res <= tol),
        IdentityCheck("outer_sum", _rel(lo + hi, tr), _rel(lo + hi, tr) <= tol),
        IdentityCheck("outer_product", _rel(lo * hi, det), _rel(lo * hi, det) <= tol),
        IdentityCheck("ordered", 0.0, 0.0 < lo < mid < hi),
    )
    return IdentityReport(t, x, checks)
