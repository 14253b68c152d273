"""Turning points, moment integrals, SWKB and proper actions."""

import math

import numpy as np
import pytest

from ptsip import catalog as cat
from ptsip.catalog import MapSign, PotentialSpec
from ptsip.checks import bound_levels, equivalence_energies, quadpack_moment
from ptsip.errors import NoBoundRegion, ParamError, RangeError
from ptsip.quantization import (
    ActionKind,
    ActionMethod,
    equivalence_residual,
    moment_integral_first,
    moment_integral_second,
    pole_moment,
    pq_action,
    pq_ground_closed,
    swkb_action,
    swkb_closed_direct,
    turning_points,
)

PLUS, MINUS = MapSign.PLUS, MapSign.MINUS
RAW = ActionMethod.RAW_QUADRATURE
CANON = ActionMethod.CANONICAL_QUADRATURE


def S(name, **p):
    return PotentialSpec.make(name, **p)


# --- moment integrals ------------------------------------------------------


def test_first_plus_full_interval():
    assert moment_integral_first(-1, 1, PLUS) == pytest.approx(math.pi * (math.sqrt(2) - 1), abs=1e-14)


def test_first_minus_example():
    expected = 0.5 * math.pi * (2 - math.sqrt(0.5) - math.sqrt(1.5))
    assert moment_integral_first(0, 0.5, MINUS) == pytest.approx(expected, abs=1e-14)
    assert expected == pytest.approx(quadpack_moment(0, 0.5, lambda t: 1 / (1 - t * t)), abs=1e-12)


def test_second_plus_example():
    expected = math.pi * (-1 - 0.5 + math.sqrt(2.5))
    assert moment_integral_second(0.25, 1, PLUS) == pytest.approx(expected, abs=1e-14)


def test_second_minus_example():
    expected = math.pi * (1 - math.sqrt(0.125) - math.sqrt(0.375))
    assert moment_integral_second(0.25, 0.5, MINUS) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("sign", [PLUS, MINUS])
def test_degenerate_interval_is_zero(sign):
    assert moment_integral_first(0.3, 0.3, sign) == pytest.approx(0.0, abs=1e-15)
    assert moment_integral_second(0.3, 0.3, sign) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize(
    "call",
    [
        lambda: moment_integral_first(1.0, 0.0, PLUS),
        lambda: moment_integral_first(-1.0, 0.5, MINUS),
        lambda: moment_integral_first(0.0, 1.2, MINUS),
        lambda: moment_integral_second(0.0, 0.5, PLUS),
        lambda: moment_integral_second(0.2, 1.0, MINUS),
        lambda: pole_moment(0.0, 1.0, 0.5),
    ],
)
def test_moment_range_errors(call):
    with pytest.raises(RangeError):
        call()


def test_pole_moment_against_quadpack():
    for c in (-2.0, -0.75, 3.0, 1.5):
        ref = quadpack_moment(-0.5, 1.0, lambda t: 1 / (t - c))
        assert pole_moment(-0.5, 1.0, c) == pytest.approx(ref, abs=1e-12)


# --- turning points --------------------------------------------------------


def test_harmonic_swkb_points():
    tp = turning_points(S("harmonic", omega=2), 4.0, ActionKind.SWKB)
    assert (tp.x_left, tp.x_right) == pytest.approx((-2.0, 2.0), abs=1e-14)


def test_isotonic_swkb_points():
    tp = turning_points(S("isotonic", omega=2, l=1), 4.0, ActionKind.SWKB)
    z = sorted([4 - 2 * math.sqrt(3), 4 + 2 * math.sqrt(3)])
    assert (tp.u_left, tp.u_right) == pytest.approx(z, rel=1e-14)
    assert (tp.x_left, tp.x_right) == pytest.approx(np.sqrt(z), rel=1e-14)


def test_rosen_morse_2_swkb_points():
    spec = S("rosen-morse-2", A=2, B=0.5, alpha=1)
    tp = turning_points(spec, 2.8125, ActionKind.SWKB)
    r = math.sqrt(0.0625 + 2.75)
    assert (tp.u_left, tp.u_right) == pytest.approx(((-0.25 - r) / 2, (-0.25 + r) / 2), abs=1e-14)
    w = cat.evaluate_superpotential(spec, np.array([tp.x_left, tp.x_right]))
    assert np.allclose(w * w, 2.8125, atol=1e-12)


def test_turning_points_on_level_curves(spec):
    e = bound_levels(spec, 4)[-1]
    e0 = spec.model.ground_energy()
    sw = turning_points(spec, e, ActionKind.SWKB)
    w = cat.evaluate_superpotential(spec, np.array([sw.x_left, sw.x_right]))
    assert np.allclose(w * w, e - e0, atol=1e-10 * (1 + abs(e)))
    pq = turning_points(spec, e, ActionKind.PROPER)
    v = cat.evaluate_potential(spec, np.array([pq.x_left, pq.x_right]))
    assert np.allclose(v, e, atol=1e-10 * (1 + abs(e)))


def test_no_bound_region_below_ground():
    with pytest.raises(NoBoundRegion):
        turning_points(S("harmonic", omega=2), -0.5, ActionKind.SWKB)
    with pytest.raises(NoBoundRegion):
        turning_points(S("harmonic", omega=2), -1.5, ActionKind.PROPER)


def test_no_bound_region_above_threshold():
    spec = cat.reference_spec("morse")
    with pytest.raises(NoBoundRegion):
        turning_points(spec, cat.continuum_threshold(spec) + 0.5, ActionKind.PROPER)


# --- actions ---------------------------------------------------------------


def test_harmonic_swkb_action():
    assert swkb_action(S("harmonic", omega=2), 6.0).value == pytest.approx(3 * math.pi, abs=1e-13)


def test_isotonic_swkb_action():
    assert swkb_action(S("isotonic", omega=2, l=1), 4.0).value == pytest.approx(math.pi, abs=1e-13)


@pytest.mark.parametrize("method", list(ActionMethod))
def test_rosen_morse_2_first_level(method):
    v = swkb_action(S("rosen-morse-2", A=2, B=0.5, alpha=1), 2.8125, method)
    assert v.value == pytest.approx(math.pi, abs=1e-9)
    assert v.method is method


def test_harmonic_ground_proper_action():
    spec = S("harmonic", omega=2)
    assert pq_action(spec, 0.0).value == pytest.approx(math.pi / 2, abs=1e-13)
    assert pq_action(spec, 0.0, RAW).value == pytest.approx(math.pi / 2, abs=1e-10)


def test_isotonic_ground_proper_action():
    # the radial l(l+1)/x^2 wall pushes the action below the naive pi (l + 3/2) / 2
    spec = S("isotonic", omega=2, l=1)
    expected = math.pi * (1.25 - math.sqrt(2) / 2)
    assert pq_ground_closed(spec) == pytest.approx(expected, abs=1e-14)
    assert pq_action(spec, 0.0, RAW).value == pytest.approx(expected, abs=1e-10)


def test_rosen_morse_1_proper_first_level():
    spec = S("rosen-morse-1", A=2, B=1, alpha=1)
    e1 = cat.closed_form_level(spec, 1)
    assert pq_ground_closed(spec) == pytest.approx(math.pi * (2 - math.sqrt(2)), abs=1e-14)
    assert pq_action(spec, e1, RAW).value == pytest.approx(pq_ground_closed(spec) + math.pi, abs=1e-9)


def test_poschl_teller_1_ground_value():
    spec = S("poschl-teller-1", A=3, B=2, alpha=1)
    expected = 0.5 * math.pi * (5 - math.sqrt(6) - math.sqrt(2))
    assert pq_ground_closed(spec) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("omega", [0.3, 1.0, 2.0, 7.5])
def test_harmonic_ground_value_any_frequency(omega):
    assert pq_ground_closed(S("harmonic", omega=omega)) == pytest.approx(math.pi / 2)


def test_ground_value_matches_raw(spec):
    e0 = spec.model.ground_energy()
    assert pq_action(spec, e0, RAW).value == pytest.approx(pq_ground_closed(spec), abs=1e-8)


def test_three_methods_agree(spec):
    for E in equivalence_energies(spec, 5):
        for act in (swkb_action, pq_action):
            c = act(spec, E).value
            assert act(spec, E, CANON).value == pytest.approx(c, abs=1e-8)
            assert act(spec, E, RAW).value == pytest.approx(c, abs=1e-8)


def test_direct_closed_form_agrees(spec):
    for E in equivalence_energies(spec, 7):
        assert swkb_closed_direct(spec, E) == pytest.approx(swkb_action(spec, E).value, abs=1e-11)


def test_swkb_exact_at_levels(spec):
    for n, e in enumerate(bound_levels(spec)):
        assert swkb_action(spec, e).value == pytest.approx(n * math.pi, abs=1e-9)


def test_gamma_constant(spec):
    gam = [pq_action(spec, e).value - n * math.pi for n, e in enumerate(bound_levels(spec))]
    assert np.std(gam, ddof=1) < 1e-9
    assert np.mean(gam) == pytest.approx(pq_ground_closed(spec), abs=1e-8)


def test_actions_increase(spec):
    es = equivalence_energies(spec, 12)
    s = [swkb_action(spec, E).value for E in es]
    p = [pq_action(spec, E).value for E in es]
    assert np.all(np.diff(s) > 0) and np.all(np.diff(p) > 0)


def test_degenerate_swkb_near_ground(spec):
    e0 = spec.model.ground_energy()
    assert swkb_action(spec, e0 + 1e-11).value == 0.0
    assert equivalence_residual(spec, e0 + 1e-6) == pytest.approx(0.0, abs=1e-8)


def test_harmonic_equivalence():
    assert abs(equivalence_residual(S("harmonic", omega=2), 3.7)) < 2e-9


def test_eckart_equivalence():
    spec = cat.reference_spec("eckart")
    E = 0.5 * cat.continuum_threshold(spec)
    assert abs(equivalence_residual(spec, E)) < 1e-8


def test_equivalence_on_grid(spec):
    for E in equivalence_energies(spec, 8):
        assert abs(equivalence_residual(spec, E)) < 1e-8


def test_second_minus_requires_b_below_a():
    # the ground proper action on the tanh map has no real closed form when b >= a
    with pytest.raises(ParamError):
        S("generic-second", lambda2=2, mu2=12, lambda0=0, alpha=1, sign=-1)
    assert math.isfinite(pq_ground_closed(S("generic-second", lambda2=12, mu2=2, lambda0=0, alpha=1, sign=-1)))
