"""Catalog: potentials, variable maps, canonical forms, superpotentials and levels."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ptsip import catalog as cat
from ptsip.catalog import (
    CATALOG,
    UNBOUNDED,
    Category,
    CanonicalForm,
    MapSign,
    PotentialId,
    PotentialSpec,
)
from ptsip.errors import DomainError, ParamError, SingularityError, Unbound


def S(name, **p):
    return PotentialSpec.make(name, **p)


# --- potentials ------------------------------------------------------------


def test_harmonic_at_origin():
    assert cat.evaluate_potential(S("harmonic", omega=2), 0.0) == pytest.approx(-1.0, abs=1e-15)


def test_rosen_morse_2_at_origin():
    assert cat.evaluate_potential(S("rosen-morse-2", A=2, B=0.5, alpha=1), 0.0) == pytest.approx(-1.9375, abs=1e-14)


def test_rosen_morse_1_at_midpoint():
    v = cat.evaluate_potential(S("rosen-morse-1", A=2, B=1, alpha=1), math.pi / 2)
    assert v == pytest.approx(-1.75, abs=1e-14)


@pytest.mark.parametrize(
    "name,params,x",
    [
        ("rosen-morse-1", dict(A=2, B=1, alpha=1), 0.0),
        ("rosen-morse-1", dict(A=2, B=1, alpha=1), math.pi),
        ("poschl-teller-1", dict(A=3, B=2, alpha=1), math.pi / 2),
        ("scarf-1", dict(A=3, B=1, alpha=1), -0.1),
        ("kepler-coulomb", dict(g=2, l=1), 0.0),
        ("isotonic", dict(omega=2, l=1), -1.0),
    ],
)
def test_outside_domain_raises(name, params, x):
    with pytest.raises(DomainError):
        cat.evaluate_potential(S(name, **params), x)


def test_array_evaluation_matches_scalar(spec):
    xs = cat.sample_grid(spec, 7)
    arr = cat.evaluate_potential(spec, xs)
    assert np.allclose(arr, [cat.evaluate_potential(spec, x) for x in xs], rtol=0, atol=0)


def test_poschl_teller_far_tail_finite():
    spec = S("poschl-teller", A=2.5, B=5, alpha=1)
    v = cat.evaluate_potential(spec, np.array([50.0, 400.0, 1000.0]))
    assert np.all(np.isfinite(v))
    assert v[-1] == pytest.approx(cat.continuum_threshold(spec), rel=1e-12)


# --- parameter validation --------------------------------------------------


@pytest.mark.parametrize(
    "name,params",
    [
        ("harmonic", dict(omega=0)),
        ("harmonic", dict(omega=-1)),
        ("rosen-morse-2", dict(A=1, B=2, alpha=1)),
        ("eckart", dict(A=0.5, B=1, alpha=1)),
        ("eckart", dict(A=1, B=2, alpha=1)),
        ("poschl-teller", dict(A=2.5, B=3, alpha=1)),
        ("rosen-morse-1", dict(A=0.5, B=1, alpha=1)),
        ("scarf-1", dict(A=1, B=1, alpha=1)),
        ("kepler-coulomb", dict(g=-1, l=0)),
        ("isotonic", dict(omega=2, l=0)),
    ],
)
def test_invalid_parameters(name, params):
    with pytest.raises(ParamError):
        S(name, **params)


def test_missing_parameter():
    with pytest.raises(ParamError):
        PotentialSpec("morse", {"A": 2.0})


def test_unknown_potential():
    with pytest.raises(ValueError):
        PotentialSpec("square-well", {})


def test_id_aliases():
    assert PotentialId.parse("rosen-morse-2") is PotentialId.ROSEN_MORSE_II
    assert PotentialId.parse(PotentialId.MORSE) is PotentialId.MORSE


# --- variable maps ---------------------------------------------------------


def test_rosen_morse_2_map_origin():
    y, dy = cat.evaluate_variable_map(S("rosen-morse-2", A=2, B=0.5, alpha=1), 0.0)
    assert (y, dy) == pytest.approx((0.0, 1.0), abs=1e-15)


def test_rosen_morse_1_map_midpoint():
    y, dy = cat.evaluate_variable_map(S("rosen-morse-1", A=2, B=1, alpha=1), math.pi / 2)
    assert (y, dy) == pytest.approx((0.0, 1.0), abs=1e-15)


@given(st.floats(0.01, 4.0))
@settings(max_examples=60)
def test_poschl_teller_map_identity(x):
    spec = S("poschl-teller", A=2, B=5, alpha=2)
    y, dy = cat.evaluate_variable_map(spec, x)
    assert y == pytest.approx(math.tanh(x), abs=1e-14)
    assert dy == pytest.approx(1.0 * (1 - y * y), abs=1e-13)


def test_generic_map_matches_canonical_derivative(spec):
    if spec.category.exceptional:
        pytest.skip("exceptional maps are not of the 1 +/- y^2 form")
    form = cat.canonical_form(spec)
    xs = cat.sample_grid(spec, 50)
    y, dy = cat.evaluate_variable_map(spec, xs)
    expected = form.alpha_eff * (1 + form.map_sign.value * y * y)
    assert np.all(dy > 0) or form.alpha_eff < 0
    assert np.allclose(dy, expected, rtol=1e-12, atol=1e-13)


# --- canonical forms -------------------------------------------------------


def test_rosen_morse_1_canonical():
    f = cat.canonical_form(S("rosen-morse-1", A=2, B=1, alpha=1))
    assert f.category is Category.FIRST and f.map_sign is MapSign.PLUS
    assert (f.lambda2, f.lambda1, f.lambda0, f.alpha_eff) == pytest.approx((2, -2, -1.75, 1))


def test_poschl_teller_1_canonical():
    f = cat.canonical_form(S("poschl-teller-1", A=3, B=2, alpha=1))
    assert f.category is Category.SECOND and f.map_sign is MapSign.PLUS
    assert (f.lambda2, f.mu2, f.lambda0, f.alpha_eff) == pytest.approx((6, 2, -17, 1))


def test_harmonic_canonical_passthrough():
    f = cat.canonical_form(S("harmonic", omega=2))
    assert f.category is Category.HARMONIC and f.bundle["omega"] == 2


def test_eckart_has_negative_effective_rate():
    f = cat.canonical_form(cat.reference_spec("eckart"))
    assert f.alpha_eff < 0 and f.map_sign is MapSign.MINUS


# --- superpotential coefficients ------------------------------------------


def test_coeffs_first_plus():
    c = cat.superpotential_coeffs(CanonicalForm(Category.FIRST, lambda2=2, lambda1=-2, alpha_eff=1, map_sign=MapSign.PLUS))
    assert (c.a, c.b) == pytest.approx((2, -0.5), abs=1e-14)


def test_coeffs_first_minus():
    c = cat.superpotential_coeffs(CanonicalForm(Category.FIRST, lambda2=6, lambda1=1, alpha_eff=1, map_sign=MapSign.MINUS))
    assert (c.a, c.b) == pytest.approx((2, 0.25), abs=1e-14)


def test_coeffs_second_plus():
    c = cat.superpotential_coeffs(
        CanonicalForm(Category.SECOND, lambda2=6, mu2=2, alpha_eff=1, map_sign=MapSign.PLUS)
    )
    assert (c.a, c.b) == pytest.approx((3, 2), abs=1e-14)


def test_coeffs_reject_nonpositive_lambda2():
    with pytest.raises(ParamError):
        cat.superpotential_coeffs(CanonicalForm(Category.FIRST, lambda2=0, lambda1=1, alpha_eff=1, map_sign=MapSign.PLUS))


@given(st.floats(0.05, 30.0), st.floats(0.1, 3.0), st.sampled_from([MapSign.PLUS, MapSign.MINUS]))
@settings(max_examples=100)
def test_slope_relation(lam2, alpha, sign):
    form = CanonicalForm(Category.SECOND, lambda2=lam2, mu2=lam2 / 2, alpha_eff=alpha, map_sign=sign)
    c = cat.superpotential_coeffs(form)
    assert abs(c.a * (c.a - sign.value * alpha) - lam2) < 1e-12 * max(1, lam2)
    assert abs(c.b * (c.b - alpha) - lam2 / 2) < 1e-12 * max(1, lam2)


# --- ground state ----------------------------------------------------------


@pytest.mark.parametrize("name", ["rosen-morse-1", "poschl-teller-1"])
def test_named_ground_state_is_zero(name):
    spec = cat.reference_spec(name)
    form = cat.canonical_form(spec)
    assert cat.ground_state_energy(form, cat.superpotential_coeffs(form)) == pytest.approx(0.0, abs=1e-13)


def test_generic_first_ground_state():
    form = CanonicalForm(Category.FIRST, lambda2=2, lambda1=-2, lambda0=0, alpha_eff=1, map_sign=MapSign.PLUS)
    assert cat.ground_state_energy(form, cat.superpotential_coeffs(form)) == pytest.approx(1.75)
    spec = S("generic-first", lambda2=2, lambda1=-2, lambda0=0, alpha=1, sign=1)
    assert spec.model.ground_energy() == pytest.approx(1.75)


# --- superpotential and Riccati -------------------------------------------


def test_superpotential_examples():
    assert cat.evaluate_superpotential(S("harmonic", omega=2), 1.5) == pytest.approx(1.5)
    assert cat.evaluate_superpotential(S("rosen-morse-2", A=2, B=0.5, alpha=1), 0.0) == pytest.approx(0.25)
    assert cat.evaluate_superpotential(S("isotonic", omega=2, l=1), 1.0) == pytest.approx(-1.0)


def test_second_category_singular_point():
    # y = 0 sits on the wall, so only the unchecked model method can reach it
    spec = S("scarf-1", A=3, B=1, alpha=1)
    with pytest.raises(SingularityError):
        spec.model.superpotential(np.array([0.0, 0.3]))
    with pytest.raises(DomainError):
        cat.evaluate_superpotential(spec, 0.0)
    assert math.isfinite(cat.evaluate_superpotential(spec, 0.3))


def test_riccati_examples():
    assert abs(cat.riccati_residual(S("harmonic", omega=2), 0.7)) < 1e-12
    assert abs(cat.riccati_residual(S("poschl-teller", A=2.5, B=5, alpha=1), 1.0)) < 1e-10
    assert abs(cat.riccati_residual(S("kepler-coulomb", g=2, l=0), 3.0)) < 1e-10


def test_riccati_on_grid(spec):
    xs = cat.sample_grid(spec, 200)
    assert np.max(np.abs(cat.riccati_residual(spec, xs))) < 1e-10


def test_reconstruction_on_grid(spec):
    if spec.category.exceptional:
        pytest.skip("no canonical polynomial")
    xs = cat.sample_grid(spec, 200)
    v = cat.evaluate_potential(spec, xs)
    assert np.all(np.abs(cat.reconstruction_residual(spec, xs)) < 1e-12 * (1 + np.abs(v)))


def test_derivative_against_finite_difference(spec):
    xs = cat.sample_grid(spec, 21)[1:-1]
    h = 1e-6 * (xs[-1] - xs[0])
    fd = (cat.evaluate_superpotential(spec, xs + h) - cat.evaluate_superpotential(spec, xs - h)) / (2 * h)
    an = cat.superpotential_derivative(spec, xs)
    assert np.allclose(an, fd, rtol=1e-6, atol=1e-6)


# --- levels ----------------------------------------------------------------


@pytest.mark.parametrize(
    "name,params,n,expected",
    [
        ("rosen-morse-1", dict(A=2, B=1, alpha=1), 1, -4 + 0.25 + 9 - 1 / 9),
        ("rosen-morse-2", dict(A=2, B=0.5, alpha=1), 1, 2.8125),
        ("scarf-1", dict(A=3, B=1, alpha=1), 2, 16.0),
        ("harmonic", dict(omega=2), 3, 6.0),
        ("morse", dict(A=2, B=1, alpha=1), 1, 3.0),
        ("isotonic", dict(omega=2, l=1), 2, 8.0),
        ("kepler-coulomb", dict(g=2, l=1), 1, 0.25 - 1 / 9),
    ],
)
def test_closed_form_levels(name, params, n, expected):
    assert cat.closed_form_level(S(name, **params), n) == pytest.approx(expected, rel=1e-14)


def test_ground_level_zero(spec):
    assert cat.closed_form_level(spec, 0) == pytest.approx(0.0, abs=1e-12)


def test_master_matches_specialized(spec):
    top = int(min(cat.level_count(spec), 25))
    for n in range(top):
        e = cat.closed_form_level(spec, n)
        assert cat.master_level(spec, n) == pytest.approx(e, rel=1e-12, abs=1e-12)


def test_levels_increase_below_threshold(spec):
    top = int(min(cat.level_count(spec), 25))
    e = [cat.closed_form_level(spec, n) for n in range(top)]
    assert all(b > a for a, b in zip(e, e[1:]))
    assert e[-1] < cat.continuum_threshold(spec)


@pytest.mark.parametrize(
    "name,params,count",
    [
        ("harmonic", dict(omega=2), UNBOUNDED),
        ("isotonic", dict(omega=2, l=1), UNBOUNDED),
        ("poschl-teller-1", dict(A=3, B=2, alpha=1), UNBOUNDED),
        ("scarf-1", dict(A=3, B=1, alpha=1), UNBOUNDED),
        ("morse", dict(A=2, B=1, alpha=1), 2),
        ("rosen-morse-2", dict(A=2, B=0.5, alpha=1), 2),
    ],
)
def test_level_count(name, params, count):
    assert cat.level_count(S(name, **params)) == count


def test_unbound_level_raises():
    spec = S("morse", A=2, B=1, alpha=1)
    with pytest.raises(Unbound):
        cat.closed_form_level(spec, 2)
    with pytest.raises(IndexError):
        cat.master_level(spec, 5)
    with pytest.raises(Unbound):
        cat.closed_form_level(spec, -1)


def test_eckart_is_rosen_morse_2_with_reflected_rate():
    # the two spectra share one formula under alpha -> -alpha
    A, B = 2.0, 20.0
    for n in range(4):
        assert cat.Eckart.level_formula(A, B, 1.0, n) == pytest.approx(cat.RosenMorseII.level_formula(A, B, -1.0, n))


def test_eckart_reference_has_two_levels():
    spec = cat.reference_spec("eckart")
    assert cat.level_count(spec) >= 2


def test_spectrum_levels_shifted():
    spec = S("generic-first", lambda2=2, lambda1=-2, lambda0=0, alpha=1, sign=1)
    lv = cat.spectrum_levels(spec, 3)
    assert [l.n for l in lv] == [0, 1, 2, 3]
    assert lv[0].shifted_energy == pytest.approx(0.0, abs=1e-14)
    assert lv[0].energy == pytest.approx(1.75)


def test_catalog_complete():
    assert len(CATALOG) == 11
    for pid in CATALOG:
        d = cat.describe(pid)
        assert d["name"] == pid.value and d["params"]
        cat.reference_spec(pid)


@given(st.floats(0.2, 5.0), st.floats(0.2, 3.0), st.integers(0, 30))
@settings(max_examples=100)
def test_harmonic_and_scarf_families(omega, alpha, n):
    assert cat.closed_form_level(S("harmonic", omega=omega), n) == pytest.approx(n * omega)
    A = 2 * alpha + 1.0
    e = cat.closed_form_level(S("scarf-1", A=A, B=0.5, alpha=alpha), n)
    assert e == pytest.approx((A + alpha * n) ** 2 - A * A, rel=1e-12)
