import math
import warnings
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.polynomial import Polynomial

from indy3.cubic import (Cubic, Evidence, NotAFixedPointWarning, critical_disk, critical_orbit_evidence,
                         critical_value_outside_disk_exact, critical_value_outside_disk_numeric,
                         escape_radius, evaluate, from_profile, iterate_orbit, monic_centered_form,
                         multiplier_at, preimages, solve_preimages, structure_report)
from indy3.graphs import IndependenceProfile

cubics = st.builds(Cubic, st.integers(3, 40), st.integers(3, 60), st.integers(1, 40))


def sorted_roots(z):
    z = np.asarray(z).ravel()
    return z[np.lexsort((np.round(z.imag, 8), np.round(z.real, 8)))]


# -- construction ------------------------------------------------------------------

def test_from_profile():
    assert from_profile(IndependenceProfile((3, 3, 1))) == Cubic(3, 3, 1)
    assert from_profile(IndependenceProfile((5, 3, 1))) == Cubic(5, 3, 1)
    with pytest.raises(ValueError):
        from_profile(IndependenceProfile((4, 3)))


def test_range_checks():
    with pytest.raises(ValueError):
        Cubic(2, 3, 1)
    with pytest.raises(ValueError):
        Cubic(3, 3, 0)
    with pytest.raises(TypeError):
        Cubic(3.0, 3, 1)
    assert Cubic(2, 1, 1, formal=True).coeffs == (2, 1, 1)


def test_evaluate_examples():
    assert evaluate(Cubic(3, 3, 1), -1) == -1
    assert evaluate(Cubic(7, 9, 3), 0) == 0
    z = complex(-1, 1 / math.sqrt(3))
    assert abs(evaluate(Cubic(4, 3, 1), z) - complex(-2, 2 * math.sqrt(3) / 9)) < 1e-14


# -- special points ------------------------------------------------------------------

def test_structure_431():
    s = structure_report(Cubic(4, 3, 1))
    assert abs(s.c2 - complex(-1, 1 / math.sqrt(3))) < 1e-15
    assert s.critical_disk.center == -1 and s.critical_disk.radius == 2


def test_structure_table_rows():
    s = structure_report(Cubic(6, 11, 6))
    assert s.delta1 == -1
    assert abs(s.c2 - (-11 + math.sqrt(13)) / 18) < 1e-15
    s = structure_report(Cubic(8, 11, 4))
    assert s.delta1 == -7 / 4 and s.c2 == -0.5
    assert s.critical_values[1] == -7 / 4


@settings(max_examples=200)
@given(cubics)
def test_structure_vieta_and_residuals(P):
    a1, a2, a3 = P.coeffs
    s = structure_report(P)
    for c in (s.c1, s.c2):
        assert abs(P.derivative(c)) <= 1e-10 * a1
    assert abs(s.c1 + s.c2 + 2 * a2 / (3 * a3)) <= 1e-12 * (1 + abs(a2 / a3))
    assert abs(s.c1 * s.c2 - a1 / (3 * a3)) <= 1e-12 * (1 + a1 / a3)
    for d in s.fixed_points:
        assert abs(evaluate(P, d) - d) <= 1e-10 * (1 + abs(d)) ** 3
    assert abs(s.delta1 + s.delta2 + a2 / a3) <= 1e-12 * (1 + a2 / a3)
    assert abs(s.delta1 * s.delta2 - (a1 - 1) / a3) <= 1e-12 * (1 + a1 / a3)
    assert s.fixed_multipliers[0] == a1
    # ordering convention: minus branch first
    if P.critical_disc > 0:
        assert s.c1.real < s.c2.real
    elif P.critical_disc < 0:
        assert s.c1.imag < 0 < s.c2.imag


def test_multiplier_examples():
    assert multiplier_at(Cubic(5, 3, 1), 0) == 5
    assert abs(multiplier_at(Cubic(5, 8, 4), -1) - 1) < 1e-12
    alpha = complex(-6, math.sqrt(8)) / 2
    assert abs(abs(multiplier_at(Cubic(12, 6, 1), alpha)) - 9) < 1e-12
    with pytest.warns(NotAFixedPointWarning):
        multiplier_at(Cubic(4, 3, 1), 1.0)


# -- monic centred form --------------------------------------------------------------------

def conjugated_coefficients(P: Cubic):
    """phi^-1 o P o phi expanded with numpy polynomial arithmetic."""
    m = monic_centered_form(P)
    phi = Polynomial([m.shift, m.scale])
    PP = Polynomial([0, *P.coeffs])
    return ((PP(phi) - m.shift) / m.scale).coef


def test_monic_examples():
    m = monic_centered_form(Cubic(3, 3, 1))
    assert abs(m.p) < 1e-15 and abs(m.q) < 1e-15
    m = monic_centered_form(Cubic(4, 3, 1))
    assert abs(m.p - 1) < 1e-14 and abs(m.q + 1) < 1e-14
    assert m.scale == 1 and m.shift == -1


@settings(max_examples=100)
@given(cubics)
def test_monic_matches_expansion(P):
    m = monic_centered_form(P)
    q, p, quad, lead = conjugated_coefficients(P)
    scale = 1 + abs(m.p) + abs(m.q)
    assert abs(lead - 1) < 1e-12
    assert abs(quad) < 1e-12 * scale * P.a2
    assert abs(p - m.p) < 1e-11 * scale
    assert abs(q - m.q) < 1e-11 * scale
    w = 0.3 - 0.7j
    assert abs(m.phi_inv(evaluate(P, m.phi(w))) - m(w)) < 1e-10 * scale


# -- escape and orbits -------------------------------------------------------------------

def test_escape_radius_examples():
    assert escape_radius(Cubic(4, 3, 1)) == pytest.approx((3 + math.sqrt(33)) / 2, abs=1e-14)
    assert escape_radius(Cubic(3, 3, 1)) == pytest.approx((3 + math.sqrt(29)) / 2, abs=1e-14)


@settings(max_examples=100)
@given(cubics, st.floats(0, 2 * math.pi))
def test_doubling_outside_escape_radius(P, theta):
    R = escape_radius(P)
    for r in (R, 1.5 * R):
        z = r * complex(math.cos(theta), math.sin(theta))
        assert abs(evaluate(P, z)) >= 2 * abs(z) * (1 - 1e-12)


def test_orbit_431_from_critical_point():
    P = Cubic(4, 3, 1)
    c = structure_report(P).c2
    out = iterate_orbit(P, c, keep_trace=True)
    assert abs(out.trace[2].real + 32 / 9) < 1e-12
    assert out.exit_disk_step == 2
    assert out.escaped and out.step >= 2
    assert abs(out.trace[out.step]) > escape_radius(P)
    assert out.status == f"Escaped({out.step})"


def test_orbit_bounded_and_escape_examples():
    out = iterate_orbit(Cubic(3, 3, 1), -0.5, max_iter=200)
    assert not out.escaped and out.status == "BoundedSoFar"
    P = Cubic(7, 6, 1)
    c2 = structure_report(P).c2
    assert abs(c2 + 0.7) < 0.05
    out = iterate_orbit(P, c2, keep_trace=True)
    assert out.trace[2].real > 0 and out.escaped
    with pytest.raises(ValueError):
        iterate_orbit(P, 0, max_iter=0)


@settings(max_examples=100)
@given(cubics, st.floats(1e-3, 10))
def test_positive_axis_monotone_escape(P, x):
    out = iterate_orbit(P, x, keep_trace=True)
    assert out.escaped
    tr = [z.real for z in out.trace]
    assert all(b > a for a, b in zip(tr, tr[1:]))


@settings(max_examples=100)
@given(cubics, st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_conjugate_symmetry_of_orbits(P, z):
    a, b = z, z.conjugate()
    R = escape_radius(P)
    for _ in range(50):
        if abs(a) > R:
            break
        a, b = evaluate(P, a), evaluate(P, b)
        assert abs(b - a.conjugate()) <= 1e-10 * max(1, abs(a))


@pytest.mark.parametrize("triple,evidence", [
    ((4, 3, 1), Evidence.BOTH_ESCAPE),
    ((7, 9, 3), Evidence.BOTH_BOUNDED),
    ((9, 13, 5), Evidence.BOTH_ESCAPE),
    ((7, 6, 1), Evidence.BOTH_ESCAPE),
])
def test_critical_orbit_evidence(triple, evidence):
    assert critical_orbit_evidence(Cubic(*triple)) is evidence


# -- preimages ---------------------------------------------------------------------

def test_preimage_examples():
    r = preimages(Cubic(3, 3, 1), -1).roots
    assert np.all(np.abs(r + 1) < 1e-12)
    r = sorted_roots(preimages(Cubic(3, 3, 1), 0).roots)
    want = sorted_roots([0, complex(-1.5, math.sqrt(3) / 2), complex(-1.5, -math.sqrt(3) / 2)])
    assert np.allclose(r, want, atol=1e-12)
    r = sorted_roots(preimages(Cubic(4, 3, 1), 0).roots)
    want = sorted_roots([0, complex(-3, math.sqrt(7)) / 2, complex(-3, -math.sqrt(7)) / 2])
    assert np.allclose(r, want, atol=1e-12)


@settings(max_examples=200)
@given(cubics, st.complex_numbers(max_magnitude=20, allow_nan=False, allow_infinity=False))
def test_preimages_match_companion_matrix(P, w):
    got = preimages(P, w)
    assert got.residuals.max() <= 1e-9 * max(1, abs(w))
    want = np.roots([P.a3, P.a2, P.a1, -w])
    # match each oracle root to its nearest computed root
    for r in want:
        assert np.min(np.abs(got.roots - r)) < 1e-6 * (1 + abs(r))


def test_preimages_vectorised_shape():
    P = Cubic(5, 7, 3)
    w = np.array([[-1, 0], [1j, 2]])
    out = solve_preimages(P, w)
    assert out.roots.shape == (2, 2, 3)
    assert out.ok.all()


def test_double_root_preimages():
    # -1 is a double root of I for (5,7,3): P(z) = -1 has roots -1, -1, -1/3
    r = sorted_roots(preimages(Cubic(5, 7, 3), -1).roots)
    assert np.allclose(r, [-1, -1, -1 / 3], atol=1e-9)


# -- non-real critical value predicate ------------------------------------------------

def bnr_triples(max_a1=12):
    for a1 in range(3, max_a1 + 1):
        for a2 in range(3, comb(a1, 2) + 1):
            for a3 in range(1, comb(a1, 3) + 1):
                if a2 * a2 < 3 * a1 * a3:
                    yield Cubic(a1, a2, a3)


def closed_form(P):
    a1, a2, a3 = P.coeffs
    s = 3 * (a1 * a1 + 6 * a1 - 3) / 4
    return abs(2 * a2 * a2 - a3 * s) > a3 * math.sqrt(s * s - 12 * a1 ** 3 + 324)


def test_critical_value_predicate_equivalence():
    checked = 0
    for P in bnr_triples():
        exact = critical_value_outside_disk_exact(P)
        a1, a2, a3 = P.coeffs
        s = a1 * a1 + 6 * a1 - 3
        if 4 * a2 ** 4 - 3 * a2 ** 2 * a3 * s + 12 * a1 ** 3 * a3 ** 2 == 324 * a3 ** 2:
            continue  # boundary ties are below float resolution
        assert critical_value_outside_disk_numeric(P) == exact, P
        assert closed_form(P) == exact, P
        checked += 1
    assert checked > 1000
    with pytest.raises(ValueError):
        critical_value_outside_disk_exact(Cubic(7, 9, 3))


def test_critical_disk_contains():
    d = critical_disk(Cubic(4, 3, 1))
    assert d.contains(-1) and d.contains(1) and not d.contains(1.01)


def test_no_warning_on_fixed_point():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        s = structure_report(Cubic(9, 13, 5))
        multiplier_at(Cubic(9, 13, 5), s.delta1)
