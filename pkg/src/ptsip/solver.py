"""Energy levels from the two quantization conditions, plus comparison tables."""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass, field

import numpy as np

from .catalog import (
    PotentialSpec,
    closed_form_level,
    continuum_threshold,
    level_count,
    potential_minimum,
)
from .errors import NoConvergence, NoSignChange, PtsipError, Unbound
from .numerics import RootSpec, find_root
from .oracle import solve_eigenvalue
from .quantization import ActionMethod, pq_action, pq_ground_closed, swkb_action

__all__ = [
    "REPORT_CAP",
    "Tolerances",
    "SpectrumRow",
    "solve_level_swkb",
    "solve_level_pq",
    "spectrum_report",
    "report_flagged",
]

REPORT_CAP = 25
"""Maximum number of rows in a report (n = 0 .. 24)."""

_EDGE = 1e-9


@dataclass(frozen=True)
class Tolerances:
    """Pass/fail thresholds used to flag report rows.

    ``level`` and ``oracle`` are relative to ``1 + |E|``; the others are
    absolute action differences.
    """

    level: float = 1e-8
    oracle: float = 1e-5
    action: float = 1e-9
    gamma: float = 1e-8
    spot_check: float = 1e-7
    equivalence: float = 1e-8
    three_way: float = 1e-8
    riccati: float = 1e-10
    reconstruction: float = 1e-12
    moment: float = 1e-10

    @classmethod
    def from_env(cls, environ=None) -> "Tolerances":
        """Defaults overridden by ``SWKB_TOL_LEVEL``, ``SWKB_TOL_ORACLE``, ..."""
        env = os.environ if environ is None else environ
        kw = {}
        for name in cls.__dataclass_fields__:
            raw = env.get(f"SWKB_TOL_{name.upper()}")
            if raw is not None:
                val = float(raw)
                if not val > 0:
                    raise ValueError(f"SWKB_TOL_{name.upper()} must be positive")
                kw[name] = val
        return cls(**kw)


@dataclass
class SpectrumRow:
    n: int
    e_closed: float
    e_swkb: float
    e_pq: float
    e_oracle: float
    swkb_action_residual: float
    gamma_value: float
    flagged: bool = False
    note: str = ""
    oracle_nodes: int | None = field(default=None, repr=False)

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("oracle_nodes")
        return d


def _check_n(spec, n):
    if n < 0 or n >= level_count(spec):
        raise Unbound(f"{spec.id.value} has no bound level n={n}")


def _upper_edge(spec, g, e0):
    thr = continuum_threshold(spec)
    if math.isfinite(thr):
        return thr - _EDGE * max(1.0, abs(thr))
    step = max(1.0, abs(e0))
    hi = e0 + step
    while g(hi) <= 0:
        step *= 2
        hi = e0 + step
        if step > 1e15:
            raise NoConvergence("action never reaches the target")
    return hi


def _solve(g, lo, hi, tol):
    try:
        return find_root(g, RootSpec(lo, hi, tol_x=tol, tol_f=0.0))
    except NoSignChange as exc:
        raise NoConvergence(str(exc)) from exc


def solve_level_swkb(spec: PotentialSpec, n: int, tol: float = 1e-13, spot_check: float | None = 1e-7) -> float:
    """Root of ``I_SWKB(E) = n pi``.

    The closed-form action drives the root search; the raw quadrature is
    evaluated once at the root as an independent spot check.

    Raises:
        Unbound: ``n`` is not a bound level.
        NoConvergence: no root in the bracket or the spot check failed.
    """
    _check_n(spec, n)
    e0 = spec.model.ground_energy()
    if n == 0:
        return e0
    target = n * math.pi
    g = lambda E: swkb_action(spec, E).value - target  # noqa: E731
    lo = e0 + _EDGE * max(1.0, abs(e0))
    E = _solve(g, lo, _upper_edge(spec, g, e0), tol)
    if spot_check is not None:
        raw = swkb_action(spec, E, ActionMethod.RAW_QUADRATURE).value
        if abs(raw - target) > spot_check:
            raise NoConvergence(f"raw SWKB action {raw} disagrees with n pi at E = {E}")
    return E


def solve_level_pq(spec: PotentialSpec, n: int, tol: float = 1e-13, spot_check: float | None = 1e-7) -> float:
    """Root of ``I_PQ(E) = I_PQ(E0) + n pi``."""
    _check_n(spec, n)
    e0 = spec.model.ground_energy()
    gamma = pq_ground_closed(spec)
    target = gamma + n * math.pi
    g = lambda E: pq_action(spec, E).value - target  # noqa: E731
    if n >= 1:
        lo = e0
    else:
        vmin = potential_minimum(spec)
        if math.isfinite(vmin):
            lo = vmin + _EDGE * max(1.0, abs(vmin))
        else:
            step = 1.0
            lo = e0 - step
            while g(lo) >= 0:
                step *= 2
                lo = e0 - step
    hi = _upper_edge(spec, g, e0)
    if n == 0 and abs(g(e0)) < 1e-13:
        E = e0
    else:
        E = _solve(g, lo, hi, tol)
    if spot_check is not None:
        raw = pq_action(spec, E, ActionMethod.RAW_QUADRATURE).value
        if abs(raw - target) > spot_check:
            raise NoConvergence(f"raw proper action {raw} disagrees with target at E = {E}")
    return E


def spectrum_report(
    spec: PotentialSpec,
    n_max: int,
    with_oracle: bool = True,
    tolerances: Tolerances | None = None,
) -> list[SpectrumRow]:
    """One row per bound level ``n = 0 .. min(n_max, count - 1, 24)``.

    A failure in any single method marks the row as flagged with a note
    instead of aborting the report.
    """
    tol = tolerances or Tolerances()
    top = int(min(n_max + 1, level_count(spec), REPORT_CAP))
    g0 = pq_ground_closed(spec)
    rows = []
    for n in range(top):
        notes = []
        e = closed_form_level(spec, n)
        scale = 1.0 + abs(e)

        def attempt(fn, label):
            try:
                return fn()
            except PtsipError as exc:
                notes.append(f"{label}: {exc}")
                return math.nan

        e_s = attempt(lambda: solve_level_swkb(spec, n), "swkb")
        e_p = attempt(lambda: solve_level_pq(spec, n), "pq")
        nodes = None
        if with_oracle:
            def run_oracle():
                guess = e_s if math.isfinite(e_s) else None
                return solve_eigenvalue(spec, n, e_guess=guess)

            res = attempt(run_oracle, "oracle")
            if isinstance(res, float):
                e_o = res
            else:
                e_o, nodes = res.energy, res.node_count
        else:
            e_o = math.nan
        s_res = attempt(lambda: swkb_action(spec, e).value - n * math.pi, "swkb action")
        gam = attempt(lambda: pq_action(spec, e).value - n * math.pi, "pq action")

        if not abs(e_s - e) <= tol.level * scale:
            notes.append("swkb level off")
        if not abs(e_p - e) <= tol.level * scale:
            notes.append("pq level off")
        if with_oracle:
            if not abs(e_o - e) <= tol.oracle * scale:
                notes.append("oracle level off")
            if nodes is not None and nodes != n:
                notes.append(f"oracle node count {nodes}")
        if not abs(s_res) <= tol.action:
            notes.append("swkb action residual")
        if not abs(gam - g0) <= tol.gamma:
            notes.append("gamma drift")
        rows.append(
            SpectrumRow(
                n=n, e_closed=e, e_swkb=e_s, e_pq=e_p, e_oracle=e_o,
                swkb_action_residual=s_res, gamma_value=gam,
                flagged=bool(notes), note="; ".join(notes), oracle_nodes=nodes,
            )
        )
    return rows


def report_flagged(rows: list[SpectrumRow], tolerances: Tolerances | None = None) -> bool:
    """True when any row is flagged or gamma varies across rows."""
    tol = tolerances or Tolerances()
    if any(r.flagged for r in rows):
        return True
    gam = np.array([r.gamma_value for r in rows])
    return len(gam) > 1 and float(np.std(gam)) > tol.action
