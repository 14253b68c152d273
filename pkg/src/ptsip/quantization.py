"""Turning points and action integrals for the SWKB and proper rules.

Both actions reduce to one template.  Between the turning points the
integrand factorises as ``c * sqrt((u_R - u)(u - u_L)) * w(u)`` in a
canonical variable ``u``, so every action is a prefactor times a moment
integral:

=============  ======  ===================  ========================
category       ``u``   weight ``w(u)``       prefactor (SWKB / PQ)
=============  ======  ===================  ========================
first          ``y``   ``1 / (1 +/- y^2)``   ``a / al``, ``sqrt(l2) / al``
second         ``y^2`` ``1 / (z (1 +/- z))`` ``a / 2al``, ``sqrt(l2) / 2al``
harmonic       ``x``   ``1``                 ``omega / 2``
Morse          ``y``   ``1 / y``             ``B / alpha``
Kepler-Coulomb ``x``   ``1 / x``             ``sqrt(b^2 - E)``
isotonic       ``x^2`` ``1 / z``             ``a / 2``
=============  ======  ===================  ========================

Each action can be computed three ways: closed form, quadrature of the
canonical moment integral, and quadrature of the raw integrand in ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .catalog import Category, MapSign, PotentialSpec
from .errors import NoBoundRegion, ParamError, RangeError
from .numerics import QuadratureSpec, integrate_sqrt_endpoints

__all__ = [
    "ActionKind",
    "ActionMethod",
    "TurningPoints",
    "ActionValue",
    "turning_points",
    "moment_integral_first",
    "moment_integral_second",
    "pole_moment",
    "swkb_action",
    "pq_action",
    "pq_ground_closed",
    "swkb_closed_direct",
    "equivalence_residual",
]

DEGENERATE_WIDTH = 1e-9
"""Shifted energies below this are treated as the ground level (zero action)."""


class ActionKind(Enum):
    SWKB = "swkb"
    PROPER = "proper"


class ActionMethod(Enum):
    CLOSED_FORM = "closed"
    CANONICAL_QUADRATURE = "canonical"
    RAW_QUADRATURE = "raw"


@dataclass(frozen=True)
class TurningPoints:
    x_left: float
    x_right: float
    u_left: float
    u_right: float
    kind: ActionKind


@dataclass(frozen=True)
class ActionValue:
    value: float
    method: ActionMethod
    error_estimate: float = 0.0


# ---------------------------------------------------------------------------
# moment integrals


def _check_interval(lo, hi):
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise RangeError("interval ends must be finite")
    if lo > hi:
        raise RangeError(f"need lo <= hi, got [{lo}, {hi}]")


def pole_moment(lo: float, hi: float, c: float) -> float:
    """``int_lo^hi sqrt((hi - t)(t - lo)) / (t - c) dt`` for ``c`` outside ``[lo, hi]``."""
    _check_interval(lo, hi)
    if lo < c < hi:
        raise RangeError(f"pole {c} inside [{lo}, {hi}]")
    m = 0.5 * (lo + hi)
    d = m - c
    return math.pi * (d - math.copysign(1.0, d) * math.sqrt((lo - c) * (hi - c)))


def moment_integral_first(lo: float, hi: float, sign: MapSign) -> float:
    """``int_lo^hi sqrt((hi - y)(y - lo)) / (1 +/- y^2) dy`` in closed form.

    The minus case requires ``-1 < lo <= hi < 1``.
    """
    _check_interval(lo, hi)
    if lo == hi:
        return 0.0
    if sign is MapSign.PLUS:
        s = math.sqrt((1 + lo * lo) * (1 + hi * hi)) - lo * hi + 1
        return math.pi / math.sqrt(2.0) * math.sqrt(s) - math.pi
    if not (-1 < lo and hi < 1):
        raise RangeError(f"minus moment needs -1 < lo < hi < 1, got [{lo}, {hi}]")
    return 0.5 * math.pi * (2 - math.sqrt((1 - lo) * (1 - hi)) - math.sqrt((1 + lo) * (1 + hi)))


def _minus_moment_any(lo, hi):
    # 1/(1 - y^2) = (1/2)[1/(y + 1) - 1/(y - 1)], valid on either side of +/-1
    if lo == hi:
        return 0.0
    return 0.5 * (pole_moment(lo, hi, -1.0) - pole_moment(lo, hi, 1.0))


def moment_integral_second(lo: float, hi: float, sign: MapSign) -> float:
    """``int_lo^hi sqrt((hi - z)(z - lo)) / (z (1 +/- z)) dz`` in closed form.

    Requires ``0 < lo``; the minus case also needs ``hi < 1``.
    """
    _check_interval(lo, hi)
    if not lo > 0:
        raise RangeError(f"second moment needs lo > 0, got {lo}")
    if sign is MapSign.MINUS and not hi < 1:
        raise RangeError(f"minus second moment needs hi < 1, got {hi}")
    if lo == hi:
        return 0.0
    s = sign.value
    return math.pi * (-s - math.sqrt(lo * hi) + s * math.sqrt((1 + s * lo) * (1 + s * hi)))


def _flat_moment(lo, hi):
    return 0.125 * math.pi * (hi - lo) ** 2


# ---------------------------------------------------------------------------
# reduction to the canonical template


@dataclass(frozen=True)
class _Reduced:
    quad: tuple[float, float, float]
    u_range: tuple[float, float]
    prefactor: float
    weight: Callable
    moment: Callable
    to_x: Callable
    raw: Callable


def _weights(cat: Category, sign: MapSign | None):
    if cat is Category.FIRST:
        if sign is MapSign.PLUS:
            return (lambda u: 1.0 / (1.0 + u * u)), (lambda lo, hi: moment_integral_first(lo, hi, MapSign.PLUS))
        return (lambda u: 1.0 / (1.0 - u * u)), _minus_moment_any
    if cat is Category.SECOND:
        s = sign.value
        return (lambda u: 1.0 / (u * (1.0 + s * u))), (lambda lo, hi: moment_integral_second(lo, hi, sign))
    if cat is Category.HARMONIC:
        return (lambda u: np.ones_like(u)), _flat_moment
    return (lambda u: 1.0 / u), (lambda lo, hi: pole_moment(lo, hi, 0.0))


def _reduce(spec: PotentialSpec, E: float, kind: ActionKind) -> _Reduced:
    m = spec.model
    cat = m.category
    thr = m.threshold()
    if not E < thr:
        raise NoBoundRegion(f"E = {E} is not below the continuum threshold {thr}")
    e0 = m.ground_energy()
    swkb = kind is ActionKind.SWKB
    em = E - e0
    c = m.coeffs()
    a, b = c.a, c.b
    sign = None

    if cat in (Category.FIRST, Category.SECOND):
        f = m.canonical()
        sign, al = f.map_sign, f.alpha_eff
        if cat is Category.FIRST:
            quad = (a * a, 2 * a * b, b * b - em) if swkb else (f.lambda2, f.lambda1, f.lambda0 - E)
            pref = (a if swkb else math.sqrt(f.lambda2)) / al
            to_x = m.x_of_y
        else:
            quad = (a * a, -(em + 2 * a * b), b * b) if swkb else (f.lambda2, -(E - f.lambda0), f.mu2)
            pref = (a if swkb else math.sqrt(f.lambda2)) / (2 * al)
            to_x = lambda z: m.x_of_y(np.sqrt(z))  # noqa: E731
        u_range = m.y_range() if cat is Category.FIRST else (0.0, 1.0 if sign is MapSign.MINUS else math.inf)
    elif cat is Category.HARMONIC:
        w = m.p["omega"]
        quad = (0.25 * w * w, 0.0, -em if swkb else -(E + 0.5 * w))
        pref = 0.5 * w
        to_x = m.x_of_y
        u_range = (-math.inf, math.inf)
    elif cat is Category.MORSE:
        A, B, al = m.p["A"], m.p["B"], m.p["alpha"]
        quad = (B * B, -2 * A * B, A * A - em) if swkb else (B * B, -B * (2 * A + al), A * A - E)
        pref = B / al
        to_x = m.x_of_y
        u_range = (0.0, math.inf)
    elif cat is Category.COULOMB:
        g, l = m.p["g"], m.p["l"]
        quad = (b * b - em, -2 * a * b, a * a) if swkb else (b * b - E, -g, l * (l + 1))
        pref = math.sqrt(quad[0])
        to_x = float
        u_range = (0.0, math.inf)
    else:  # isotonic
        w, l = m.p["omega"], m.p["l"]
        quad = (a * a, -(em + 2 * a * b), b * b) if swkb else (0.25 * w * w, -(E + w * (l + 1.5)), l * (l + 1))
        pref = 0.5 * a
        to_x = np.sqrt
        u_range = (0.0, math.inf)

    weight, moment = _weights(cat, sign)
    if swkb:
        def raw(x):
            wx = m.superpotential(x)
            return np.sqrt(np.maximum(em - wx * wx, 0.0))
    else:
        def raw(x):
            return np.sqrt(np.maximum(E - m.potential(x), 0.0))
    return _Reduced(quad, u_range, pref, weight, moment, to_x, raw)


def _roots(c2, c1, c0):
    """Real roots of ``c2 u^2 + c1 u + c0`` (``c2 > 0``), ascending."""
    if not c2 > 0:
        raise NoBoundRegion("no classically allowed region")
    disc = c1 * c1 - 4 * c2 * c0
    if not disc > 0:
        raise NoBoundRegion(f"turning-point discriminant {disc:.3e} is not positive")
    q = -0.5 * (c1 + math.copysign(math.sqrt(disc), c1))
    r1 = q / c2
    r2 = c0 / q if q != 0 else -r1
    return (r1, r2) if r1 < r2 else (r2, r1)


def _turning(red: _Reduced, kind: ActionKind) -> TurningPoints:
    uL, uR = _roots(*red.quad)
    lo, hi = red.u_range
    if not (lo <= uL and uR <= hi):
        raise NoBoundRegion(f"turning points ({uL}, {uR}) outside variable range ({lo}, {hi})")
    x1, x2 = float(red.to_x(uL)), float(red.to_x(uR))
    xL, xR = min(x1, x2), max(x1, x2)
    if not xL < xR:
        raise NoBoundRegion("turning points coincide")
    return TurningPoints(xL, xR, uL, uR, kind)


def turning_points(spec: PotentialSpec, E: float, kind: ActionKind = ActionKind.SWKB) -> TurningPoints:
    """Classical turning points in both the canonical variable and ``x``.

    SWKB points solve ``W^2 = E - E0``; proper points solve ``V = E``.

    Raises:
        NoBoundRegion: no real, distinct roots inside the map's range.
    """
    kind = ActionKind(kind)
    if kind is ActionKind.SWKB and not E - spec.model.ground_energy() > 0:
        raise NoBoundRegion("SWKB turning points need E > E0")
    return _turning(_reduce(spec, E, kind), kind)


# ---------------------------------------------------------------------------
# actions


def _action(spec, E, kind, method, tol):
    method = ActionMethod(method)
    red = _reduce(spec, E, kind)
    tp = _turning(red, kind)
    if method is ActionMethod.CLOSED_FORM:
        return ActionValue(red.prefactor * red.moment(tp.u_left, tp.u_right), method)
    if method is ActionMethod.CANONICAL_QUADRATURE:
        uL, uR = tp.u_left, tp.u_right
        f = lambda u: np.sqrt(np.maximum((uR - u) * (u - uL), 0.0)) * red.weight(u)  # noqa: E731
        val, err = integrate_sqrt_endpoints(f, QuadratureSpec(uL, uR, tol))
        return ActionValue(red.prefactor * val, method, abs(red.prefactor) * err)
    val, err = integrate_sqrt_endpoints(red.raw, QuadratureSpec(tp.x_left, tp.x_right, tol))
    return ActionValue(val, method, err)


def swkb_closed_direct(spec: PotentialSpec, E: float) -> float:
    """SWKB action written directly in ``(a, b, E - E0)``.

    An algebraically independent route to the SWKB closed form, used to
    cross-check the moment-integral assembly.
    """
    m = spec.model
    cat = m.category
    em = E - m.ground_energy()
    c = m.coeffs()
    a, b = c.a, c.b
    pi = math.pi
    if cat is Category.FIRST:
        f = m.canonical()
        al = f.alpha_eff
        if f.map_sign is MapSign.PLUS:
            s = em + a * a - b * b
            return pi / (math.sqrt(2.0) * al) * math.sqrt(math.hypot(s, 2 * a * b) + s) - pi * a / al
        # exterior map (negative alpha_eff) flips the sign of the second root
        t = 1.0 if al > 0 else -1.0
        return pi / (2 * al) * (2 * a - math.sqrt((a + b) ** 2 - em) - t * math.sqrt((a - b) ** 2 - em))
    if cat is Category.SECOND:
        f = m.canonical()
        al = f.alpha_eff
        if f.map_sign is MapSign.PLUS:
            return pi / (2 * al) * (math.sqrt((a + b) ** 2 + em) - a - b)
        return pi / (2 * al) * (a - b - math.sqrt((a - b) ** 2 - em))
    if cat is Category.HARMONIC:
        return pi * em / m.p["omega"]
    if cat is Category.MORSE:
        A, al = m.p["A"], m.p["alpha"]
        return pi / al * (A - math.sqrt(A * A - em))
    if cat is Category.COULOMB:
        return pi * (a * b / math.sqrt(b * b - em) - a)
    return pi * em / (2 * m.p["omega"])


def swkb_action(
    spec: PotentialSpec,
    E: float,
    method: ActionMethod | str = ActionMethod.CLOSED_FORM,
    tol: float = 1e-11,
) -> ActionValue:
    """``int sqrt(E - E0 - W^2) dx`` between the SWKB turning points.

    Energies within :data:`DEGENERATE_WIDTH` of ``E0`` give zero action.
    """
    method = ActionMethod(method)
    em = E - spec.model.ground_energy()
    if abs(em) < DEGENERATE_WIDTH:
        return ActionValue(0.0, method)
    if em < 0:
        raise NoBoundRegion(f"E = {E} lies below the ground level")
    return _action(spec, E, ActionKind.SWKB, method, tol)


def pq_action(
    spec: PotentialSpec,
    E: float,
    method: ActionMethod | str = ActionMethod.CLOSED_FORM,
    tol: float = 1e-11,
) -> ActionValue:
    """``int sqrt(E - V) dx`` between the proper turning points."""
    return _action(spec, E, ActionKind.PROPER, method, tol)


def pq_ground_closed(spec: PotentialSpec) -> float:
    """Proper action at the ground level, ``I_PQ(E0)``, in closed form."""
    m = spec.model
    cat = m.category
    pi = math.pi
    c = m.coeffs()
    a, b = c.a, c.b
    if cat is Category.FIRST:
        f = m.canonical()
        return f.map_sign.value * pi / f.alpha_eff * (a - math.sqrt(f.lambda2))
    if cat is Category.SECOND:
        f = m.canonical()
        s = f.map_sign.value
        if f.map_sign is MapSign.MINUS and not b < a:
            raise ParamError(f"ground proper action needs b < a, got a={a}, b={b}")
        return pi / (2 * f.alpha_eff) * (b + s * a - s * math.sqrt(f.lambda2) - math.sqrt(f.mu2))
    if cat in (Category.HARMONIC, Category.MORSE):
        return 0.5 * pi
    if cat is Category.COULOMB:
        return pi * (a - math.sqrt(a * (a - 1)))
    l = m.p["l"]
    return 0.5 * pi * (l + 1.5 - math.sqrt(l * (l + 1)))


def equivalence_residual(spec: PotentialSpec, E: float, tol: float = 1e-11) -> float:
    """``I_SWKB(E) - I_PQ(E) + I_PQ(E0)``, every term by raw quadrature.

    Zero for every shape-invariant potential at every ``E`` in
    ``(E0, threshold)``, not only at eigenvalues.
    """
    raw = ActionMethod.RAW_QUADRATURE
    e0 = spec.model.ground_energy()
    s = swkb_action(spec, E, raw, tol).value
    p = pq_action(spec, E, raw, tol).value
    p0 = pq_action(spec, e0, raw, tol).value
    return s - p + p0
