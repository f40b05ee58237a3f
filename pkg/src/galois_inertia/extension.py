"""Scaling maps and the two-parameter (scale, shift) extension.

An element ``E(a, b)`` acts on a triple by scaling with ``a`` and then
applying the inertia map with parameter ``b``; the middle moment moves as
``B -> a B + b``. Products follow the composition of actions with the right
factor acting first::

    E(a1, b1) * E(a2, b2) = E(a1 a2, b1 + a1 b2)

which is the multiplication of the affine maps ``x -> a x + b``.

Two contexts share the code: ``"real"`` (ordered moments, ``a > 0``,
``b >= 0``, a semigroup) and ``"complex"`` (C^3, ``a != 0``, any ``b``, a
group).
"""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Literal, Sequence, Union

from .complex_maps import ComplexMapResult, jbar_map
from .core import (
    ComplexTriple,
    DomainError,
    InertiaTriple,
    NoInverseInSemigroupError,
    ZeroScaleError,
)
from .real_maps import j_map

Context = Literal["real", "complex"]
Scalar = Union[float, complex]


def _is_real(v) -> bool:
    return isinstance(v, Real) or (isinstance(v, complex) and v.imag == 0.0)


def s_apply(t: Sequence, a: Scalar):
    """Scale every component of ``t`` by ``a``; the inverse is ``s_apply(., 1/a)``.

    An :class:`InertiaTriple` scaled by a positive real stays an
    ``InertiaTriple``; anything else becomes a :class:`ComplexTriple`.
    """
    if a == 0:
        raise ZeroScaleError("scale factor must be non-zero")
    A, B, C = t
    if isinstance(t, InertiaTriple) and _is_real(a) and a.real > 0:
        a = float(a.real)
        return InertiaTriple(a * A, a * B, a * C)
    a = complex(a)
    return ComplexTriple(a * A, a * B, a * C)


@dataclass(frozen=True)
class ScalingMap:
    a: Scalar

    def __post_init__(self):
        if self.a == 0:
            raise ZeroScaleError("scale factor must be non-zero")

    def __call__(self, t: Sequence):
        return s_apply(t, self.a)

    def inverse(self) -> "ScalingMap":
        return ScalingMap(1 / self.a)


@dataclass(frozen=True)
class ExtendedElement:
    """The coset element ``s(a)`` followed by ``j(b)``."""

    a: Scalar
    b: Scalar = 0.0
    context: Context = "complex"

    def __post_init__(self):
        if self.a == 0:
            raise ZeroScaleError("scale factor must be non-zero")
        if self.context == "real":
            if not (_is_real(self.a) and _is_real(self.b)):
                raise DomainError(f"real context needs real parameters, got E({self.a}, {self.b})")
            if not (self.a.real > 0 and self.b.real >= 0):
                raise DomainError(f"real context needs a > 0 and b >= 0, got E({self.a}, {self.b})")
        elif self.context != "complex":
            raise ValueError(f"unknown context {self.context!r}")

    @property
    def scaling(self) -> ScalingMap:
        return ScalingMap(self.a)


IDENTITY = ExtendedElement(1.0, 0.0, "real")


def ext_apply(e: ExtendedElement, t: Sequence):
    """Act on ``t``: scale by ``e.a``, then apply the inertia map at ``e.b``.

    Real context returns an :class:`InertiaTriple`, complex context a
    :class:`ComplexMapResult` (one sheet).
    """
    if e.context == "real":
        scaled = s_apply(InertiaTriple(*(float(v) for v in t)), float(e.a.real))
        return j_map(scaled, float(e.b.real))
    scaled = s_apply(ComplexTriple(*(complex(v) for v in t)), e.a)
    return jbar_map(scaled, e.b)


def _combined_context(e1: ExtendedElement, e2: ExtendedElement) -> Context:
    return "real" if e1.context == e2.context == "real" else "complex"


def ext_mul(e1: ExtendedElement, e2: ExtendedElement) -> ExtendedElement:
    """Product ``e1 * e2`` (``e2`` acts first): ``E(a1 a2, b1 + a1 b2)``."""
    return ExtendedElement(e1.a * e2.a, e1.b + e1.a * e2.b, _combined_context(e1, e2))


def ext_inverse(e: ExtendedElement) -> ExtendedElement:
    """``E(1/a, -b/a)``. In the real context only pure scalings are invertible."""
    if e.context == "real":
        if e.b != 0:
            raise NoInverseInSemigroupError(f"E({e.a}, {e.b}) has a positive shift and no inverse in the semigroup")
        return ExtendedElement(1 / e.a, 0.0, "real")
    return ExtendedElement(1 / e.a, -e.b / e.a, "complex")


@dataclass(frozen=True)
class AffineMap:
    """``x -> a x + b``."""

    a: Scalar
    b: Scalar = 0.0

    def __post_init__(self):
        if self.a == 0:
            raise ZeroScaleError("affine multiplier must be non-zero")

    def __call__(self, x):
        return self.a * x + self.b


def to_affine(e: ExtendedElement) -> AffineMap:
    return AffineMap(e.a, e.b)


def from_affine(f: AffineMap, context: Context = "complex") -> ExtendedElement:
    return ExtendedElement(f.a, f.b, context)


def affine_compose(f: AffineMap, g: AffineMap) -> AffineMap:
    """``f o g`` (``g`` applied first)."""
    return AffineMap(f.a * g.a, f.a * g.b + f.b)


__all__ = [
    "AffineMap",
    "ComplexMapResult",
    "ExtendedElement",
    "IDENTITY",
    "ScalingMap",
    "affine_compose",
    "ext_apply",
    "ext_inverse",
    "ext_mul",
    "from_affine",
    "s_apply",
    "to_affine",
]
