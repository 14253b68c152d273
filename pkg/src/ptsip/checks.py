"""Verification suite shared by ``ptsip verify`` and the acceptance tests.

Every check returns a :class:`CheckResult` holding the worst residual it
saw.  Independent references come from outside the closed forms: scipy's
QUADPACK for the moment integrals, raw quadrature in ``x`` for the
actions, and the Numerov oracle for the spectra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import catalog as cat
from .catalog import MapSign, PotentialSpec
from .oracle import GridSpec, default_domain, solve_eigenvalue
from .quantization import (
    ActionMethod,
    equivalence_residual,
    moment_integral_first,
    moment_integral_second,
    pq_action,
    pq_ground_closed,
    swkb_action,
)
from .solver import REPORT_CAP, solve_level_pq, solve_level_swkb

__all__ = [
    "CheckResult",
    "CHECKS",
    "bound_levels",
    "equivalence_energies",
    "quadpack_moment",
    "check_moment_integrals",
    "check_riccati",
    "check_reconstruction",
    "check_master_formula",
    "check_swkb_quantization",
    "check_gamma",
    "check_three_way",
    "check_equivalence",
    "check_spectrum",
    "check_oracle",
    "check_grid_halving",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    subject: str
    max_residual: float
    tolerance: float
    samples: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return bool(self.max_residual < self.tolerance)


def bound_levels(spec: PotentialSpec, cap: int = REPORT_CAP) -> list[float]:
    """Closed-form levels ``n = 0 .. min(count, cap) - 1``."""
    top = int(min(cat.level_count(spec), cap))
    return [cat.closed_form_level(spec, n) for n in range(top)]


def equivalence_energies(spec: PotentialSpec, k: int = 20, top_level: int = 10) -> np.ndarray:
    """``k`` energies evenly inside ``(E0, E_top)``.

    ``E_top`` is the continuum threshold, or level ``top_level`` when the
    spectrum is unbounded.
    """
    e0 = spec.model.ground_energy()
    thr = cat.continuum_threshold(spec)
    e_top = thr if math.isfinite(thr) else cat.closed_form_level(spec, top_level)
    return e0 + (e_top - e0) * np.arange(1, k + 1) / (k + 1)


# ---------------------------------------------------------------------------
# moment integrals


def quadpack_moment(lo: float, hi: float, weight) -> float:
    """``int sqrt((hi - t)(t - lo)) w(t) dt`` with QUADPACK's algebraic weight."""
    val, _ = integrate.quad(
        weight, lo, hi, weight="alg", wvar=(0.5, 0.5), epsabs=1e-14, epsrel=1e-13, limit=200
    )
    return val


def _pairs(rng, n, lo, hi):
    u = rng.uniform(lo, hi, size=(n, 2))
    u.sort(axis=1)
    return u


def check_moment_integrals(n: int = 100, seed: int = 0, tol: float = 1e-10) -> list[CheckResult]:
    """Closed-form moment integrals against QUADPACK on random intervals."""
    rng = np.random.default_rng(seed)
    cases = [
        ("first+", _pairs(rng, n, -3.0, 3.0), lambda a, b: moment_integral_first(a, b, MapSign.PLUS),
         lambda t: 1.0 / (1.0 + t * t)),
        ("first-", _pairs(rng, n, -0.99, 0.99), lambda a, b: moment_integral_first(a, b, MapSign.MINUS),
         lambda t: 1.0 / (1.0 - t * t)),
    ]
    half = n // 2
    second = [
        ("second+", _pairs(rng, half, 0.05, 5.0), lambda a, b: moment_integral_second(a, b, MapSign.PLUS),
         lambda t: 1.0 / (t * (1.0 + t))),
        ("second-", _pairs(rng, n - half, 0.05, 0.99), lambda a, b: moment_integral_second(a, b, MapSign.MINUS),
         lambda t: 1.0 / (t * (1.0 - t))),
    ]
    out = []
    for name, pairs, closed, w in cases:
        res = max(abs(closed(a, b) - quadpack_moment(a, b, w)) for a, b in pairs)
        out.append(CheckResult("moment-integrals", name, res, tol, len(pairs)))
    res2 = 0.0
    for _, pairs, closed, w in second:
        res2 = max(res2, max(abs(closed(a, b) - quadpack_moment(a, b, w)) for a, b in pairs))
    out.append(CheckResult("moment-integrals", "second+/-", res2, tol, n))
    return out


# ---------------------------------------------------------------------------
# per-potential checks


def check_riccati(spec: PotentialSpec, tol: float = 1e-10) -> CheckResult:
    xs = cat.sample_grid(spec, 200)
    res = float(np.max(np.abs(cat.riccati_residual(spec, xs))))
    return CheckResult("riccati", spec.id.value, res, tol, len(xs))


def check_reconstruction(spec: PotentialSpec, tol: float = 1e-12) -> CheckResult:
    """Relative gap between raw ``V`` and its canonical polynomial (generic categories)."""
    if spec.category.exceptional:
        return CheckResult("reconstruction", spec.id.value, 0.0, tol, 0, "exceptional: no canonical polynomial")
    xs = cat.sample_grid(spec, 200)
    v = cat.evaluate_potential(spec, xs)
    res = float(np.max(np.abs(cat.reconstruction_residual(spec, xs)) / (1.0 + np.abs(v))))
    return CheckResult("reconstruction", spec.id.value, res, tol, len(xs))


def check_master_formula(spec: PotentialSpec, tol: float = 1e-12) -> CheckResult:
    top = int(min(cat.level_count(spec), REPORT_CAP))
    res = max(
        abs(cat.closed_form_level(spec, n) - cat.master_level(spec, n)) / (1 + abs(cat.closed_form_level(spec, n)))
        for n in range(top)
    )
    return CheckResult("master-formula", spec.id.value, res, tol, top)


def check_swkb_quantization(
    spec: PotentialSpec, tol: float = 1e-9, method: ActionMethod = ActionMethod.CLOSED_FORM
) -> CheckResult:
    """``I_SWKB(E_n) - n pi`` at closed-form levels."""
    levels = bound_levels(spec)
    res = max(abs(swkb_action(spec, e, method).value - n * math.pi) for n, e in enumerate(levels))
    return CheckResult("swkb-quantization", spec.id.value, res, tol, len(levels), method.value)


def check_gamma(
    spec: PotentialSpec, tol: float = 1e-9, tol_mean: float = 1e-8,
    method: ActionMethod = ActionMethod.RAW_QUADRATURE,
) -> CheckResult:
    """Spread of ``I_PQ(E_n) - n pi`` and its offset from the closed ``I_PQ(E0)``.

    The reported residual is ``max(std / tol, |mean - gamma| / tol_mean) * tol``
    so one number carries both criteria.
    """
    levels = bound_levels(spec)
    gam = np.array([pq_action(spec, e, method).value - n * math.pi for n, e in enumerate(levels)])
    std = float(np.std(gam, ddof=1)) if len(gam) > 1 else 0.0
    off = abs(float(np.mean(gam)) - pq_ground_closed(spec))
    worst = max(std / tol, off / tol_mean) * tol
    return CheckResult(
        "gamma", spec.id.value, worst, tol, len(levels), f"std={std:.2e} mean_offset={off:.2e}"
    )


def check_three_way(spec: PotentialSpec, tol: float = 1e-8, k: int = 20) -> CheckResult:
    """Closed form versus both quadratures, for both actions, on ``k`` energies."""
    res = 0.0
    for E in equivalence_energies(spec, k):
        for act in (swkb_action, pq_action):
            c = act(spec, E, ActionMethod.CLOSED_FORM).value
            q = act(spec, E, ActionMethod.CANONICAL_QUADRATURE).value
            r = act(spec, E, ActionMethod.RAW_QUADRATURE).value
            res = max(res, abs(c - q), abs(c - r))
    return CheckResult("three-way", spec.id.value, res, tol, 2 * k)


def check_equivalence(spec: PotentialSpec, tol: float = 1e-8, k: int = 20) -> CheckResult:
    energies = equivalence_energies(spec, k)
    res = max(abs(equivalence_residual(spec, E)) for E in energies)
    return CheckResult("equivalence", spec.id.value, res, tol, len(energies))


def check_spectrum(spec: PotentialSpec, tol: float = 1e-8) -> CheckResult:
    """Levels solved from both rules against the closed form, relative to ``1 + |E|``."""
    levels = bound_levels(spec)
    res = 0.0
    for n, e in enumerate(levels):
        s = solve_level_swkb(spec, n)
        p = solve_level_pq(spec, n)
        res = max(res, abs(s - e) / (1 + abs(e)), abs(p - e) / (1 + abs(e)))
    return CheckResult("spectrum", spec.id.value, res, tol, len(levels))


def check_oracle(spec: PotentialSpec, tol: float = 1e-5) -> CheckResult:
    """Unseeded Numerov levels against the closed form; node counts must equal ``n``."""
    levels = bound_levels(spec)
    res = 0.0
    bad_nodes = []
    for n, e in enumerate(levels):
        r = solve_eigenvalue(spec, n)
        res = max(res, abs(r.energy - e) / (1 + abs(e)))
        if r.node_count != n:
            bad_nodes.append(n)
    if bad_nodes:
        res = math.inf
    detail = f"node mismatch at n={bad_nodes}" if bad_nodes else ""
    return CheckResult("oracle", spec.id.value, res, tol, len(levels), detail)


def check_grid_halving(spec: PotentialSpec | None = None, n: int = 1, points: int = 1001) -> CheckResult:
    """Error ratio between ``points`` and ``2 points - 1`` grids on one domain.

    Passes when halving ``h`` improves the error by at least 8x; the
    residual reported is ``8 / ratio`` against a tolerance of 1.
    """
    spec = spec or cat.reference_spec("harmonic")
    e = cat.closed_form_level(spec, n)
    fine = default_domain(spec, e, 2 * points - 1)
    coarse = GridSpec(fine.x_min, fine.x_max, points, fine.boundary_offset)
    e1 = abs(solve_eigenvalue(spec, n, coarse).energy - e)
    e2 = abs(solve_eigenvalue(spec, n, fine).energy - e)
    ratio = e1 / e2 if e2 > 0 else math.inf
    return CheckResult("grid-halving", spec.id.value, 8.0 / ratio, 1.0, 2, f"ratio={ratio:.2f}")


CHECKS = {
    "riccati": check_riccati,
    "reconstruction": check_reconstruction,
    "master-formula": check_master_formula,
    "swkb-quantization": check_swkb_quantization,
    "gamma": check_gamma,
    "three-way": check_three_way,
    "equivalence": check_equivalence,
    "spectrum": check_spectrum,
    "oracle": check_oracle,
}
"""Per-potential checks by CLI name.  ``moment-integrals`` and
``grid-halving`` are global and handled separately."""
