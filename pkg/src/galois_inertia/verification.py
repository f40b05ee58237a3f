"""Sampled property suites behind ``galois-inertia verify``.

Each property is evaluated on a batch of random inputs and summarised by its
worst residual. Sampling is deterministic in ``seed``.

Distributions: real triples log-uniform in ``[1e-2, 1e2]`` (sorted), real
shifts uniform in ``[0, 10]``; complex triples with real and imaginary parts
uniform in ``[-10, 10]``, complex shifts uniform in the disk ``|z| <= 10``.
A fixed ``triple`` replaces the sampled real triples and, cast to complex,
the sampled complex ones.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .complex_maps import jbar_inverse_apply, jbar_map
from .core import ComplexTriple, InertiaTriple, involution, mod_involution_residual, validate_triple
from .extension import (
    AffineMap,
    ExtendedElement,
    affine_compose,
    ext_apply,
    ext_mul,
    s_apply,
    to_affine,
)
from .geometry import (
    GaloisAxis,
    galois_axes,
    maccullagh_residual,
    sample_inputs,
    steiner_tensor,
    sym3_eigenvalues,
)
from .real_maps import delta_extremum, invariants, j_map, jacobian_det


@dataclass(frozen=True)
class PropertyResult:
    property: str
    samples: int
    worst_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.worst_residual <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "samples": self.samples,
            "worst_residual": self.worst_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def rel_err(a: Sequence, b: Sequence) -> float:
    """Componentwise relative error, ``max |a_i - b_i| / |b_i|``."""
    return max(abs(p - q) / abs(q) if q != 0 else abs(p) for p, q in zip(a, b))


def normwise_err(a: Sequence, b: Sequence) -> float:
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


def exact_delta(t: Sequence[float], x: float) -> Fraction:
    """Discriminant ``(A + C + x)^2 - 4 A C (1 + x/B)`` in exact rationals."""
    A, B, C, x = (Fraction(v) for v in (*t, x))
    return (A + C + x) ** 2 - 4 * A * C * (1 + x / B)


def fd_jacobian(f: Callable[[np.ndarray], np.ndarray], t: np.ndarray, rel_step: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian with per-component step ``rel_step * |t_k|``."""
    t = np.asarray(t, dtype=float)
    J = np.empty((3, 3))
    for k in range(3):
        h = rel_step * abs(t[k])
        tp, tm = t.copy(), t.copy()
        tp[k] += h
        tm[k] -= h
        J[:, k] = (np.asarray(f(tp)) - np.asarray(f(tm))) / (2.0 * h)
    return J


def _complex_samples(rng: np.random.Generator, n: int) -> list[complex]:
    r = 10.0 * np.sqrt(rng.uniform(size=n))
    phi = rng.uniform(0.0, 2.0 * math.pi, size=n)
    return [complex(z) for z in r * np.exp(1j * phi)]


def run_verification(triple: Sequence[float] | None = None, samples: int = 1000, seed: int = 7) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    triples, xs, ys = sample_inputs(samples, int(rng.integers(2**63)))
    if triple is not None:
        fixed = validate_triple(*triple)
        ts = [fixed] * samples
    else:
        ts = [InertiaTriple(*map(float, row)) for row in triples]
    xs, ys = [float(v) for v in xs], [float(v) for v in ys]
    out: list[PropertyResult] = []

    def record(name: str, residuals: list[float], tol: float) -> None:
        worst = max(residuals) if residuals else math.nan
        out.append(PropertyResult(name, len(residuals), worst, tol))

    # real semigroup
    record("semigroup_law", [rel_err(j_map(j_map(t, y), x), j_map(t, x + y)) for t, x, y in zip(ts, xs, ys)], 1e-11)
    record("commutativity", [rel_err(j_map(j_map(t, y), x), j_map(j_map(t, x), y)) for t, x, y in zip(ts, xs, ys)], 1e-11)
    record("neutral_element", [rel_err(j_map(t, 0.0), t) for t in ts], 4.5e-16)

    closure = []
    for t, x in zip(ts, xs):
        try:
            validate_triple(*j_map(t, x))
            closure.append(0.0)
        except ValueError:
            closure.append(1.0)
    record("closure", closure, 0.0)

    transport = []
    for t, x in zip(ts, xs):
        tr, det, _ = invariants(t, x)
        lo, _, hi = j_map(t, x)
        transport.append(max(abs(lo + hi - tr) / tr, abs(lo * hi - det) / det))
    record("trace_det_transport", transport, 1e-11)

    scales = rng.uniform(0.1, 10.0, size=samples)
    record("scaling_equivariance",
           [rel_err(j_map(s_apply(t, a), a * x), s_apply(j_map(t, x), a)) for t, x, a in zip(ts, xs, map(float, scales))],
           1e-11)

    def fd_det(t, x):
        J = fd_jacobian(lambda v: j_map(tuple(v), x), np.array(t))
        return abs(np.linalg.det(J) - jacobian_det(t, x)) / abs(jacobian_det(t, x))

    record("jacobian_fd", [fd_det(t, x) for t, x in zip(ts, xs)], 1e-5)
    record("jacobian_identity_at_zero", [abs(jacobian_det(t, 0.0) - 1.0) for t in ts], 1e-12)
    record("delta_xy_identity",
           [abs(invariants(j_map(t, y), x).delta - invariants(t, x + y).delta) / invariants(t, x + y).delta
            for t, x, y in zip(ts, xs, ys)],
           1e-11)

    minima = []
    for t in ts:
        rep = delta_extremum(t)
        minima.append(abs(float(exact_delta(t, rep.x_min)) - rep.delta_min) / rep.delta_min)
    record("delta_minimum", minima, 1e-12)

    d2 = []
    for t, x in zip(ts, xs):
        A, B, C = t
        fA, fB, fC, fx = (Fraction(v) for v in (A, B, C, x))
        D = fA + fC - 2 * fB - fx
        rhs = -4 * (B + x) * (B - A) * (C - B) / B
        d2.append(abs(float(D * D - exact_delta(t, x)) - rhs) / abs(rhs))
    record("d_squared_minus_delta", d2, 1e-11)

    # complex group
    if triple is not None:
        cts = [ComplexTriple(*(complex(v) for v in fixed))] * samples
    else:
        parts = rng.uniform(-10.0, 10.0, size=(samples, 3, 2))
        cts = [ComplexTriple(*(complex(re, im) for re, im in row)) for row in parts]
    cxs, cys = _complex_samples(rng, samples), _complex_samples(rng, samples)

    group, inverse, sheets = [], [], []
    for t, x, y in zip(cts, cxs, cys):
        if abs(t.B) < 1e-6 or abs(t.B + y) < 1e-6 or abs(t.B + x) < 1e-6:
            continue
        group.append(mod_involution_residual(jbar_map(jbar_map(t, y), x), jbar_map(t, x + y)))
        inverse.append(mod_involution_residual(jbar_inverse_apply(jbar_map(t, x), x), t))
        r = jbar_map(t, x)
        sheets.append(max(mod_involution_residual(jbar_map(involution(t), x), r),
                          mod_involution_residual(involution(r), r)))
    record("complex_group_law", group, 1e-10)
    record("complex_inverse", inverse, 1e-10)
    record("sheet_identities", sheets, 1e-12)
    record("branch_consistency",
           [rel_err([z.real for z in jbar_map(t, x)], j_map(t, x)) for t, x in zip(ts, xs)], 4.5e-16)

    # extension
    a1s = rng.uniform(0.1, 10.0, size=samples)
    record("conjugation_identity",
           [rel_err(s_apply(j_map(s_apply(t, a), x), 1.0 / a), j_map(t, x / a)) for t, x, a in zip(ts, xs, map(float, a1s))],
           1e-11)

    ext = []
    params = rng.uniform(0.1, 5.0, size=(samples, 4))
    for t, (a1, b1, a2, b2) in zip(ts, params):
        e1 = ExtendedElement(float(a1), float(b1), "real")
        e2 = ExtendedElement(float(a2), float(b2), "real")
        ext.append(rel_err(ext_apply(ext_mul(e1, e2), t), ext_apply(e1, ext_apply(e2, t))))
    record("extended_action", ext, 1e-11)

    hom = []
    for (a1, b1, a2, b2), z in zip(params, rng.uniform(-10, 10, size=samples)):
        e1, e2 = ExtendedElement(float(a1), float(b1)), ExtendedElement(float(a2), float(b2))
        f = affine_compose(to_affine(e1), to_affine(e2))
        g = to_affine(ext_mul(e1, e2))
        direct = to_affine(e1)(to_affine(e2)(z))
        hom.append(max(abs(f.a - g.a) / abs(g.a), abs(f.b - g.b) / max(abs(g.b), 1e-300),
                       abs(f(z) - direct) / max(abs(direct), abs(z), 1.0)))
    record("affine_homomorphism", hom, 1e-12)

    witness = ext_mul(ExtendedElement(2, 0), ExtendedElement(1, 1)) != ext_mul(ExtendedElement(1, 1), ExtendedElement(2, 0))
    record("nonabelian_witness", [0.0 if witness else 1.0], 0.0)

    # geometry
    oracle, both_sheets, block, circ = [], [], [], []
    for t, x in zip(ts, xs):
        plus, minus = galois_axes(t)
        ref = j_map(t, x)
        Mp, Mm = steiner_tensor(t, plus, x), steiner_tensor(t, minus, x)
        ev_p, ev_m = sym3_eigenvalues(Mp), sym3_eigenvalues(Mm)
        oracle.append(rel_err(ev_p, ref))
        both_sheets.append(rel_err(ev_m, ev_p))
        tr, det, _ = invariants(t, x)
        K = Mp[np.ix_([0, 2], [0, 2])]
        block.append(max(abs(np.trace(K) - tr) / tr, abs(np.linalg.det(K) - det) / det))
        circ.append(max(maccullagh_residual(t, plus), maccullagh_residual(t, minus)))
    record("geometry_oracle", oracle, 1e-9)
    record("galois_sheets_agree", both_sheets, 1e-12)
    record("k_block_trace_det", block, 1e-11)
    record("maccullagh_galois", circ, 1e-10)
    return out


def report_dict(results: list[PropertyResult], **meta) -> dict:
    return {**meta, "all_pass": all(r.passed for r in results), "properties": [r.to_dict() for r in results]}


__all__ = ["PropertyResult", "fd_jacobian", "report_dict", "run_verification", "GaloisAxis"]
