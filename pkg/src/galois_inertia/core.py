"""Shared types, validation and the outer-pair involution.

Triples are plain named tuples so they unpack, index and feed into numpy
without ceremony. ``InertiaTriple`` holds ordered real principal moments,
``ComplexTriple`` an arbitrary point of C^3.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class InertiaError(ValueError):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "INVALID"


class NonFiniteError(InertiaError):
    code = "NONFINITE"


class NonPositiveError(InertiaError):
    code = "NONPOSITIVE"


class DegenerateError(InertiaError):
    code = "DEGENERATE"


class DisorderedError(InertiaError):
    code = "DISORDERED"


class NegativeParameterError(InertiaError):
    code = "NEGATIVE_PARAMETER"


class OrderingViolationError(InertiaError):
    code = "ORDERING_VIOLATION"


class PoleAtZeroBError(InertiaError):
    code = "POLE_AT_ZERO_B"


class ZeroScaleError(InertiaError):
    code = "ZERO_SCALE"


class DomainError(InertiaError):
    code = "DOMAIN"


class NoInverseInSemigroupError(InertiaError):
    code = "NO_INVERSE_IN_SEMIGROUP"


class NonUnitAxisError(InertiaError):
    code = "NON_UNIT_AXIS"


class IntermediateDegenerateError(InertiaError):
    code = "INTERMEDIATE_DEGENERATE"


@dataclass(frozen=True)
class Tolerances:
    eps_deg: float = 1e-12
    eps_id: float = 1e-11
    eps_oracle: float = 1e-9
    eps_fd: float = 1e-5

    def __post_init__(self):
        for name in ("eps_deg", "eps_id", "eps_oracle", "eps_fd"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be strictly positive, got {value!r}")


DEFAULT_TOLERANCES = Tolerances()


class InertiaTriple(NamedTuple):
    """Principal moments ``0 < A < B < C`` (unit-mass convention)."""

    A: float
    B: float
    C: float


class ComplexTriple(NamedTuple):
    A: complex
    B: complex
    C: complex


def validate_triple(A: float, B: float, C: float, eps_deg: float = DEFAULT_TOLERANCES.eps_deg) -> InertiaTriple:
    """Return ``InertiaTriple(A, B, C)`` if ``0 < A < B < C`` with margin.

    Neighbouring moments must differ by at least ``eps_deg`` relative to the
    larger of the two. Checks run in the order positivity, degeneracy,
    ordering, so ``(2, 2, 4)`` is reported as degenerate, not disordered.
    """
    A, B, C = float(A), float(B), float(C)
    if not all(math.isfinite(v) for v in (A, B, C)):
        raise NonFiniteError(f"moments must be finite, got ({A!r}, {B!r}, {C!r})")
    if min(A, B, C) <= 0.0:
        raise NonPositiveError(f"moments must be positive, got ({A!r}, {B!r}, {C!r})")
    for p, q in ((A, B), (B, C), (A, C)):
        if abs(q - p) < eps_deg * max(p, q):
            raise DegenerateError(f"moments {p!r} and {q!r} coincide within relative {eps_deg:g}")
    if not A < B < C:
        raise DisorderedError(f"moments must satisfy A < B < C, got ({A!r}, {B!r}, {C!r})")
    return InertiaTriple(A, B, C)


def as_inertia_triple(t: Sequence[float], eps_deg: float = DEFAULT_TOLERANCES.eps_deg) -> InertiaTriple:
    """Coerce ``t`` to an ordered triple.

    Plain sequences get the full check of :func:`validate_triple`. An existing
    ``InertiaTriple`` (typically the output of a map) only has to be finite and
    strictly ordered-positive: images of well-separated triples can be
    legitimately closer than ``eps_deg``, and must stay composable.
    """
    if isinstance(t, InertiaTriple):
        A, B, C = t
        if not all(math.isfinite(v) for v in t):
            raise NonFiniteError(f"moments must be finite, got {tuple(t)}")
        if A <= 0.0:
            raise NonPositiveError(f"moments must be positive, got {tuple(t)}")
        if not A < B < C:
            raise (DegenerateError if A == B or B == C else DisorderedError)(
                f"moments must satisfy A < B < C, got {tuple(t)}")
        return t
    A, B, C = t
    return validate_triple(A, B, C, eps_deg)


def as_complex_triple(t: Sequence[complex]) -> ComplexTriple:
    A, B, C = t
    return ComplexTriple(complex(A), complex(B), complex(C))


def involution(t: Sequence) -> ComplexTriple:
    """Swap the outer components: ``(A, B, C) -> (C, B, A)``."""
    A, B, C = t
    return ComplexTriple(C, B, A)


def eq_mod_involution(t1: Sequence, t2: Sequence, tol: float = DEFAULT_TOLERANCES.eps_id) -> bool:
    """Compare two triples up to swapping their outer components.

    The middle components, the outer sums ``A + C`` and the outer products
    ``A * C`` are compared normwise: with ``s`` the largest component modulus
    of either triple, sums and middles must agree to ``tol * s`` and products
    to ``tol * s**2``. No ordering of complex values is needed, so the test
    is stable at branch points where the outer pair coalesces.
    """
    return mod_involution_residual(t1, t2) <= tol


def mod_involution_residual(t1: Sequence, t2: Sequence) -> float:
    """Normwise relative distance used by :func:`eq_mod_involution`."""
    a1, b1, c1 = (complex(v) for v in t1)
    a2, b2, c2 = (complex(v) for v in t2)
    scale = max(abs(a1), abs(b1), abs(c1), abs(a2), abs(b2), abs(c2))
    if scale == 0.0:
        return 0.0
    if not math.isfinite(scale):
        return math.inf
    a1, b1, c1, a2, b2, c2 = (v / scale for v in (a1, b1, c1, a2, b2, c2))
    return max(abs(b1 - b2), abs((a1 + c1) - (a2 + c2)), abs(a1 * c1 - a2 * c2))
