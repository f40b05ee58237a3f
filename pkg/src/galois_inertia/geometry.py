"""Geometric ground truth for the inertia maps.

Everything here works from the full inertia tensor rather than from the
closed-form map: the Galois axes come from the circular sections of the
MacCullagh ellipsoid ``x^2/A + y^2/B + z^2/C = 1``, the shifted tensor from
the parallel-axis theorem

    J = diag(A, B, C) + x (I - n n^T),    x = d**2 (unit mass),

and its spectrum from a symmetric eigensolver. Along a Galois axis the sorted
spectrum reproduces :func:`galois_inertia.real_maps.j_map`; along other axes
it generally does not compose additively, which :func:`falsify_search`
probes.
"""
from __future__ import annotations

import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .core import (
    InertiaError,
    IntermediateDegenerateError,
    NegativeParameterError,
    NonUnitAxisError,
    as_inertia_triple,
)

_UNIT_TOL = 1e-14


def _unit_check(n: np.ndarray) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or not np.all(np.isfinite(n)):
        raise NonUnitAxisError(f"axis must be a finite 3-vector, got {n!r}")
    if abs(float(n @ n) - 1.0) > _UNIT_TOL:
        raise NonUnitAxisError(f"axis must have unit length, |n|^2 = {float(n @ n)!r}")
    return n


def galois_axes(t: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """The two Galois axes ``(cos th, 0, +sin th)`` and ``(cos th, 0, -sin th)``.

    ``sin^2 th = A (C - B) / (B (C - A))`` and
    ``cos^2 th = C (B - A) / (B (C - A))``, both formed from differences of
    the inputs so neither loses digits when the other is small.
    """
    A, B, C = as_inertia_triple(t)
    s2 = A * (C - B) / (B * (C - A))
    c2 = C * (B - A) / (B * (C - A))
    norm = math.sqrt(s2 + c2)
    c, s = math.sqrt(c2) / norm, math.sqrt(s2) / norm
    return np.array([c, 0.0, s]), np.array([c, 0.0, -s])


def circular_section_residual(t: Sequence[float], n: np.ndarray) -> float:
    """``n3^2/A + n1^2/C - 1/B``, scaled by ``B``; zero for a Galois axis with ``n2 = 0``."""
    A, B, C = as_inertia_triple(t)
    n = _unit_check(n)
    return float(B * (n[2] ** 2 / A + n[0] ** 2 / C) - 1.0)


def steiner_tensor(t: Sequence[float], n: np.ndarray, x: float) -> np.ndarray:
    """Inertia tensor at distance ``sqrt(x)`` from the centre of mass along ``n``."""
    A, B, C = as_inertia_triple(t)
    n = _unit_check(n)
    x = float(x)
    if x < 0.0:
        raise NegativeParameterError(f"x must be non-negative, got {x!r}")
    return np.diag([A, B, C]) + x * (np.eye(3) - np.outer(n, n))


def sym3_eigenpairs(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and eigenvectors of a symmetric 3x3 matrix.

    LAPACK ``syevd`` through :func:`numpy.linalg.eigh`; every pair is checked
    against ``|M v - lam v| <= 1e-10 |M|``.
    """
    M = np.asarray(M, dtype=float)
    if M.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {M.shape}")
    if not np.allclose(M, M.T, rtol=0.0, atol=1e-14 * max(np.abs(M).max(), 1e-300)):
        raise ValueError("matrix is not symmetric")
    w, V = np.linalg.eigh(M)
    bound = 1e-10 * np.linalg.norm(M, 2)
    resid = np.linalg.norm(M @ V - V * w, axis=0)
    if np.any(resid > bound):
        raise ArithmeticError(f"eigenpair residual {resid.max():g} exceeds {bound:g}")
    return w, V


def sym3_eigenvalues(M: np.ndarray) -> tuple[float, float, float]:
    w, _ = sym3_eigenpairs(M)
    return float(w[0]), float(w[1]), float(w[2])


def sym3_eigenvalues_trig(M: np.ndarray) -> tuple[float, float, float]:
    """Closed-form (trigonometric) eigenvalues of a symmetric 3x3 matrix.

    Second oracle, independent of LAPACK. Accuracy is absolute, roughly
    ``eps * |M|``, and degrades for nearly repeated eigenvalues.
    """
    M = np.asarray(M, dtype=float)
    p1 = M[0, 1] ** 2 + M[0, 2] ** 2 + M[1, 2] ** 2
    if p1 == 0.0:
        return tuple(float(v) for v in sorted(np.diag(M)))
    q = np.trace(M) / 3.0
    p2 = float(np.sum((np.diag(M) - q) ** 2) + 2.0 * p1)
    p = math.sqrt(p2 / 6.0)
    r = float(np.linalg.det((M - q * np.eye(3)) / p)) / 2.0
    phi = math.acos(min(1.0, max(-1.0, r))) / 3.0
    hi = q + 2.0 * p * math.cos(phi)
    lo = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    mid = 3.0 * q - hi - lo
    return float(lo), float(mid), float(hi)


def _section_basis(n: np.ndarray) -> np.ndarray:
    # Two orthonormal vectors spanning the plane normal to n, as columns.
    k = int(np.argmin(np.abs(n)))
    e = np.zeros(3)
    e[k] = 1.0
    u = np.cross(n, e)
    u /= np.linalg.norm(u)
    v = np.cross(n, u)
    return np.column_stack([u, v])


def section_squared_radii(t: Sequence[float], n: np.ndarray, phis: np.ndarray) -> np.ndarray:
    """Squared radius of the central section normal to ``n`` at angles ``phis``."""
    A, B, C = as_inertia_triple(t)
    n = _unit_check(n)
    P = _section_basis(n)
    dirs = P @ np.vstack([np.cos(phis), np.sin(phis)])
    q = dirs[0] ** 2 / A + dirs[1] ** 2 / B + dirs[2] ** 2 / C
    return 1.0 / q


def maccullagh_residual(t: Sequence[float], n: np.ndarray) -> float:
    """Non-circularity ``(r2_max - r2_min) / r2_max`` of the central section.

    The radius extrema come from the 2x2 restriction ``Q`` of
    ``diag(1/A, 1/B, 1/C)`` to the section plane: ``r2 = 1/mu`` over its
    eigenvalues ``mu``, so the residual is ``(mu_max - mu_min) / mu_max``,
    with the eigenvalue gap taken from the discriminant to keep it accurate
    near zero.
    """
    A, B, C = as_inertia_triple(t)
    n = _unit_check(n)
    P = _section_basis(n)
    Q = P.T @ np.diag([1.0 / A, 1.0 / B, 1.0 / C]) @ P
    a, b, d = Q[0, 0], 0.5 * (Q[0, 1] + Q[1, 0]), Q[1, 1]
    gap = math.hypot(a - d, 2.0 * b)
    mu_max = 0.5 * (a + d + gap)
    return float(gap / mu_max)


# -- axis rules ------------------------------------------------------------


@dataclass(frozen=True)
class GaloisAxis:
    """The Galois axis of the current triple; ``sheet`` picks the sign of ``n3``."""

    sheet: int = 1

    def __post_init__(self):
        if self.sheet not in (1, -1):
            raise ValueError(f"sheet must be +1 or -1, got {self.sheet!r}")

    def axis(self, t: Sequence[float]) -> np.ndarray:
        plus, minus = galois_axes(t)
        return plus if self.sheet == 1 else minus

    @property
    def name(self) -> str:
        return "galois" if self.sheet == 1 else "galois:-"


@dataclass(frozen=True)
class PrincipalAxis:
    """The principal direction of the ``index``-th smallest moment (1, 2 or 3)."""

    index: int = 1

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"principal index must be 1, 2 or 3, got {self.index!r}")

    def axis(self, t: Sequence[float]) -> np.ndarray:
        n = np.zeros(3)
        n[self.index - 1] = 1.0
        return n

    @property
    def name(self) -> str:
        return f"principal:{self.index}"


@dataclass(frozen=True)
class FixedDirection:
    """A fixed direction in the principal frame (normalised on construction)."""

    direction: tuple[float, float, float] = field(default=(1.0, 1.0, 1.0))

    def __post_init__(self):
        v = np.asarray(self.direction, dtype=float)
        norm = float(np.linalg.norm(v))
        if v.shape != (3,) or not norm > 0 or not math.isfinite(norm):
            raise NonUnitAxisError(f"direction must be a non-zero finite 3-vector, got {self.direction!r}")
        object.__setattr__(self, "direction", tuple(float(c) for c in v / norm))

    def axis(self, t: Sequence[float]) -> np.ndarray:
        return np.array(self.direction)

    @property
    def name(self) -> str:
        return "fixed:" + ":".join(repr(c) for c in self.direction)


AxisRule = Union[GaloisAxis, PrincipalAxis, FixedDirection]


def parse_rule(text: str) -> AxisRule:
    """Parse ``galois``, ``galois:-``, ``principal:K`` or ``fixed:X:Y:Z``."""
    kind, _, rest = text.strip().partition(":")
    kind = kind.lower()
    if kind == "galois":
        return GaloisAxis(-1 if rest.strip() == "-" else 1)
    if kind == "principal":
        return PrincipalAxis(int(rest or 1))
    if kind == "fixed":
        parts = [float(p) for p in rest.split(":")]
        if len(parts) != 3:
            raise ValueError(f"fixed direction needs three components, got {text!r}")
        return FixedDirection(tuple(parts))
    raise ValueError(f"unknown axis rule {text!r}")


def axis_rule_map(rule: AxisRule, t: Sequence[float], x: float) -> tuple[float, float, float]:
    """Sorted spectrum of the tensor shifted by ``x`` along ``rule``'s axis."""
    t = as_inertia_triple(t)
    return sym3_eigenvalues(steiner_tensor(t, rule.axis(t), x))


def additivity_residual(rule: AxisRule, t: Sequence[float], x: float, y: float) -> float:
    """Max-norm relative distance between ``rule(x) o rule(y)`` and ``rule(x + y)``."""
    t = as_inertia_triple(t)
    if x < 0 or y < 0:
        raise NegativeParameterError(f"x and y must be non-negative, got {x!r}, {y!r}")
    first = axis_rule_map(rule, t, y)
    try:
        mid = as_inertia_triple(first)
    except InertiaError as exc:
        raise IntermediateDegenerateError(f"{rule.name} left the ordered domain after y={y!r}: {exc}") from exc
    composed = np.array(axis_rule_map(rule, mid, x))
    direct = np.array(axis_rule_map(rule, t, x + y))
    return float(np.max(np.abs(composed - direct)) / np.max(np.abs(direct)))


# -- falsification search --------------------------------------------------

MOMENT_RANGE = (1e-2, 1e2)
SHIFT_RANGE = (0.0, 10.0)


def sample_inputs(samples: int, seed: int,
                  moment_range: tuple[float, float] = MOMENT_RANGE,
                  shift_range: tuple[float, float] = SHIFT_RANGE) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Draw ``samples`` triples (log-uniform moments, sorted) and shifts ``x``, ``y``.

    Draw order is fixed: all moments, then all ``x``, then all ``y``, from one
    PCG64 stream seeded with ``seed``.
    """
    rng = np.random.default_rng(seed)
    lo, hi = moment_range
    triples = np.sort(np.exp(rng.uniform(math.log(lo), math.log(hi), size=(samples, 3))), axis=1)
    xs = rng.uniform(*shift_range, size=samples)
    ys = rng.uniform(*shift_range, size=samples)
    return triples, xs, ys


@dataclass(frozen=True)
class RuleReport:
    rule: str
    samples: int
    evaluated: int
    errors: int
    max_residual: float
    median_residual: float
    argmax: dict

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "samples": self.samples,
            "evaluated": self.evaluated,
            "errors": self.errors,
            "max_residual": self.max_residual,
            "median_residual": self.median_residual,
            "argmax": self.argmax,
        }


@dataclass(frozen=True)
class FalsifyReport:
    seed: int
    samples: int
    rules: tuple[RuleReport, ...]

    def __getitem__(self, name: str) -> RuleReport:
        for r in self.rules:
            if r.rule == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "moment_range": list(MOMENT_RANGE),
            "shift_range": list(SHIFT_RANGE),
            "rules": [r.to_dict() for r in self.rules],
        }


def _safe_residual(rule: AxisRule, t, x: float, y: float) -> float | None:
    try:
        return additivity_residual(rule, t, x, y)
    except InertiaError:
        return None


def falsify_search(rules: Sequence[AxisRule], samples: int, seed: int, workers: int = 1) -> FalsifyReport:
    """Measure how far each axis rule is from an additive one-parameter family.

    Inputs come from :func:`sample_inputs`. Samples where the rule leaves the
    ordered domain are counted in ``errors`` and skipped. Results are
    collected in sample order, so the report does not depend on ``workers``.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    triples, xs, ys = sample_inputs(samples, seed)
    jobs = [(tuple(map(float, triples[i])), float(xs[i]), float(ys[i])) for i in range(samples)]
    reports = []
    for rule in rules:
        def run(job, rule=rule):
            return _safe_residual(rule, *job)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                residuals = list(pool.map(run, jobs))
        else:
            residuals = [run(job) for job in jobs]

        ok = [(r, i) for i, r in enumerate(residuals) if r is not None]
        if ok:
            worst, k = max(ok, key=lambda p: (p[0], -p[1]))
            t, x, y = jobs[k]
            argmax = {"index": k, "triple": list(t), "x": x, "y": y}
            median = statistics.median(r for r, _ in ok)
        else:
            worst, median, argmax = math.nan, math.nan, {}
        reports.append(RuleReport(rule.name, samples, len(ok), samples - len(ok), worst, median, argmax))
    return FalsifyReport(seed, samples, tuple(reports))
