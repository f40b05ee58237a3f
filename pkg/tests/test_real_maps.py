import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from galois_inertia.core import NegativeParameterError, validate_triple
from galois_inertia.extension import s_apply
from galois_inertia.real_maps import (
    appendix_identities,
    delta_extremum,
    invariants,
    j_map,
    jacobian_det,
    stable_delta,
)

from _strategies import inertia_triples, scales, shifts, small_shifts

SQRT17, SQRT12 = math.sqrt(17), math.sqrt(12)


def close(a, b, tol=1e-12):
    return all(abs(p - q) <= tol * abs(q) for p, q in zip(a, b))


@pytest.mark.parametrize(
    "x, expected",
    [(2.0, (7.0, 8.0, 17.0)), (0.0, (5.0, 4.0, 9.0)), (1.0, (6.0, 6.0, 12.0))],
)
def test_invariants_examples(x, expected):
    assert tuple(invariants((1, 2, 4), x)) == expected


def test_invariants_match_tensor_block():
    # the 1-3 block of diag(A,B,C) + x(I - n n^T) at the circular-section axis
    A, B, C = 1.0, 2.0, 4.0
    s2 = A * (C - B) / (B * (C - A))
    for x in (0.5, 1.0, 2.0):
        K = np.array([[A + x * s2, -x * math.sqrt(s2 * (1 - s2))], [-x * math.sqrt(s2 * (1 - s2)), C + x * (1 - s2)]])
        tr, det, _ = invariants((A, B, C), x)
        assert math.isclose(np.trace(K), tr, rel_tol=1e-14)
        assert math.isclose(np.linalg.det(K), det, rel_tol=1e-13)


def test_j_map_examples():
    assert j_map((1, 2, 4), 0.0) == (1, 2, 4)
    assert close(j_map((1, 2, 4), 2.0), ((7 - SQRT17) / 2, 4, (7 + SQRT17) / 2))
    assert close(j_map((1, 2, 4), 1.0), ((6 - SQRT12) / 2, 3, (6 + SQRT12) / 2))
    assert close(j_map((1, 2, 4), 2.0), (1.4384472, 4, 5.5615528), tol=1e-7)


def test_j_map_rejects_negative_parameter():
    with pytest.raises(NegativeParameterError):
        j_map((1, 2, 4), -1.0)


def test_correctly_rounded_outer_pair():
    lo, mid, hi = j_map((1, 2, 4), 2.0, correctly_rounded=True)
    assert (lo, mid, hi) == (1.4384471871911697, 4.0, 5.56155281280883)


@settings(max_examples=50, deadline=None)
@given(inertia_triples(), small_shifts)
def test_correctly_rounded_is_within_an_ulp_of_fast_path(t, x):
    fast = j_map(t, x)
    exact = j_map(t, x, correctly_rounded=True)
    for a, b in zip(fast, exact):
        assert abs(a - b) <= 4 * math.ulp(b)


def test_jacobian_examples():
    assert jacobian_det((1, 2, 4), 0.0) == 1.0
    assert math.isclose(jacobian_det((1, 2, 4), 2.0), 6 / SQRT17, rel_tol=1e-15)
    assert jacobian_det((1, 3, 9), 0.0) == 1.0
    with pytest.raises(NegativeParameterError):
        jacobian_det((1, 2, 4), -0.5)


def fd_jacobian_det(t, x, rel_step=1e-6):
    t = np.array(t, dtype=float)
    cols = []
    for k in range(3):
        h = rel_step * t[k]
        up, dn = t.copy(), t.copy()
        up[k] += h
        dn[k] -= h
        cols.append((np.array(j_map(up, x)) - np.array(j_map(dn, x))) / (2 * h))
    return np.linalg.det(np.column_stack(cols))


def test_jacobian_matches_finite_differences_at_example():
    assert math.isclose(fd_jacobian_det((1, 2, 4), 2.0), 6 / SQRT17, rel_tol=1e-8)


@settings(deadline=None)
@given(inertia_triples(min_gap=1e-2), small_shifts)
def test_jacobian_matches_finite_differences(t, x):
    assert math.isclose(fd_jacobian_det(t, x), jacobian_det(t, x), rel_tol=1e-5)


@pytest.mark.parametrize("t, x_min, delta_min", [((1, 2, 4), -1.0, 8.0), ((1, 2, 3), -1.0, 3.0)])
def test_delta_extremum_examples(t, x_min, delta_min):
    rep = delta_extremum(t)
    assert rep.x_min == x_min and rep.delta_min == delta_min
    assert invariants(t, x_min).delta == delta_min
    for h in (1e-3, 0.1, 1.0):
        assert invariants(t, x_min + h).delta > delta_min
        assert invariants(t, x_min - h).delta > delta_min


@given(inertia_triples())
def test_delta_minimum_is_exact_minimiser(t):
    # exact rational Delta, independent of the closed form being tested
    A, B, C = map(Fraction, t)
    rep = delta_extremum(t)
    xm = 2 * A * C / B - A - C
    delta = (A + C + xm) ** 2 - 4 * A * C * (1 + xm / B)
    assert math.isclose(float(delta), rep.delta_min, rel_tol=1e-12)
    assert delta == 4 * A * C * (B - A) * (C - B) / B**2


def test_appendix_identities_examples():
    rep = appendix_identities((1, 2, 4), 2.0)
    assert rep.passed and rep["d_squared_minus_delta"].residual == 0.0
    rep = appendix_identities((3, 4, 5), 0.0)
    assert rep.passed and rep["delta_positive"].residual == 4.0
    with pytest.raises(NegativeParameterError):
        appendix_identities((1, 2, 4), -1.0)


@given(inertia_triples(), shifts)
def test_appendix_identities_hold(t, x):
    assert appendix_identities(t, x).passed


@given(inertia_triples(), shifts)
def test_stable_delta_agrees_with_definition(t, x):
    A, B, C = map(Fraction, t)
    fx = Fraction(x)
    exact = (A + C + fx) ** 2 - 4 * A * C * (1 + fx / B)
    assert math.isclose(stable_delta(*t, x), float(exact), rel_tol=1e-14)


# -- semigroup properties --------------------------------------------------


@given(inertia_triples(), shifts, shifts)
def test_semigroup_law(t, x, y):
    assert close(j_map(j_map(t, y), x), j_map(t, x + y), tol=1e-11)


@given(inertia_triples(), shifts, shifts)
def test_commutativity(t, x, y):
    assert close(j_map(j_map(t, y), x), j_map(j_map(t, x), y), tol=1e-11)


@given(inertia_triples())
def test_neutral_element_within_two_ulp(t):
    for a, b in zip(j_map(t, 0.0), t):
        assert abs(a - b) <= 2 * math.ulp(b)


@given(inertia_triples(), shifts)
def test_closure(t, x):
    lo, mid, hi = j_map(t, x)
    assert 0 < lo < mid < hi


def test_image_can_be_closer_than_the_degeneracy_margin():
    # the upper gap of the image shrinks like (B - A)(C - B) / x, so a triple
    # separated by ~1e-6 maps to one separated by ~1e-12: strictly ordered, and
    # still composable, but below the margin required of external input
    t = (1.0, 1.0000020233444882, 1.00001000005)
    img = j_map(t, 17.0)
    assert 0 < img.A < img.B < img.C
    assert (img.C - img.B) / img.C < 1e-12
    with pytest.raises(ValueError):
        validate_triple(*img)
    assert close(j_map(img, 3.0), j_map(t, 20.0), tol=1e-11)


def test_closure_with_margin_on_sampled_triples():
    rng = np.random.default_rng(1)
    for _ in range(2000):
        t = tuple(np.sort(np.exp(rng.uniform(-7, 7, size=3))))
        validate_triple(*j_map(t, float(rng.uniform(0, 1e3))))


@given(inertia_triples(), shifts)
def test_trace_and_determinant_transport(t, x):
    tr, det, _ = invariants(t, x)
    lo, _, hi = j_map(t, x)
    assert math.isclose(lo + hi, tr, rel_tol=1e-11)
    assert math.isclose(lo * hi, det, rel_tol=1e-11)


@given(inertia_triples(), shifts, scales)
def test_scaling_equivariance(t, x, a):
    t = validate_triple(*t)
    assert close(j_map(s_apply(t, a), a * x), s_apply(j_map(t, x), a), tol=1e-11)


@given(inertia_triples(), shifts, shifts)
def test_discriminant_composes(t, x, y):
    lhs, rhs = invariants(j_map(t, y), x), invariants(t, x + y)
    # tr^2 - 4 det cancels when the outer pair nearly meets, so the natural scale is tr^2
    assert abs(lhs.delta - rhs.delta) <= 1e-11 * max(rhs.tr**2, abs(rhs.delta))


def test_negative_parameters_leave_the_domain():
    # necessity of x >= 0, checked empirically: for each x < 0 a search over
    # triples at the scale of |x| finds one whose image is not ordered-positive
    rng = np.random.default_rng(0)
    for x in (-1e-6, -1e-3, -0.1, -1.0, -10.0):
        exits = 0
        for _ in range(200):
            A, B, C = np.sort(abs(x) * np.exp(rng.uniform(-3, 3, size=3)))
            tr = A + C + x
            det = A * C * (1 + x / B)
            delta = tr * tr - 4 * det
            if delta < 0:
                exits += 1
                continue
            lo, hi = (tr - math.sqrt(delta)) / 2, (tr + math.sqrt(delta)) / 2
            exits += not 0 < lo < B + x < hi
        assert exits > 0, x
