"""Numerical kernels: square-root endpoint quadrature and bracketed roots.

Nothing in here knows about quantum mechanics.  The quadrature targets
integrands that vanish like square roots at both ends of the interval,
which is the shape of every action integral between classical turning
points.  With ``t = m + h cos(theta)`` such an integrand becomes a smooth,
even, periodic function of ``theta`` and the equal-weight midpoint rule
converges spectrally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import optimize

from .errors import MaxIterations, NonFiniteSample, NoSignChange, QuadratureFailure

__all__ = [
    "QuadratureSpec",
    "RootSpec",
    "integrate_sqrt_endpoints",
    "fixed_order_rule",
    "find_root",
]

_MIN_ORDER = 16


@dataclass(frozen=True)
class QuadratureSpec:
    lo: float
    hi: float
    target_abs_tol: float = 1e-11
    max_order: int = 2**14

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        if not self.target_abs_tol > 0:
            raise ValueError("target_abs_tol must be positive")


@dataclass(frozen=True)
class RootSpec:
    lo: float
    hi: float
    tol_x: float = 1e-12
    tol_f: float = 1e-12
    max_iter: int = 200


def _theta_rule(f, m, h, order):
    theta = (np.arange(order) + 0.5) * (math.pi / order)
    t = m + h * np.cos(theta)
    vals = np.asarray(f(t), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteSample("integrand returned a non-finite value")
    return (math.pi / order) * h * float(np.sum(vals * np.sin(theta)))


def fixed_order_rule(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, order: int) -> float:
    """One application of the cosine-substituted midpoint rule with ``order`` nodes."""
    return _theta_rule(f, 0.5 * (lo + hi), 0.5 * (hi - lo), order)


def integrate_sqrt_endpoints(
    f: Callable[[np.ndarray], np.ndarray], q: QuadratureSpec
) -> tuple[float, float]:
    """Integrate ``f`` over ``[q.lo, q.hi]`` with the cosine substitution.

    ``f`` must accept a numpy array.  The node count starts at 16 and
    doubles until two successive estimates differ by less than
    ``q.target_abs_tol``.  An integrand of the form
    ``g(t) / sqrt((hi - t)(t - lo))`` with smooth ``g`` also converges
    spectrally, since ``sin(theta)`` cancels the denominator.

    Returns:
        ``(value, error_estimate)`` where the estimate is the last change.

    Raises:
        QuadratureFailure: ``q.max_order`` reached without convergence.
        NonFiniteSample: ``f`` produced NaN or inf.
    """
    m = 0.5 * (q.lo + q.hi)
    h = 0.5 * (q.hi - q.lo)
    order = _MIN_ORDER
    prev = _theta_rule(f, m, h, order)
    while order < q.max_order:
        order *= 2
        cur = _theta_rule(f, m, h, order)
        delta = abs(cur - prev)
        if delta < q.target_abs_tol:
            return cur, delta
        prev = cur
    raise QuadratureFailure(
        f"no convergence on [{q.lo}, {q.hi}] at order {order}: last change {delta:.3e}"
    )


def find_root(g: Callable[[float], float], r: RootSpec) -> float:
    """Root of ``g`` inside the bracket ``[r.lo, r.hi]`` by Brent's method.

    Iterates never leave the bracket.  An endpoint where ``|g| <= tol_f`` is
    returned directly.
    """
    lo, hi = float(r.lo), float(r.hi)
    glo, ghi = g(lo), g(hi)
    if abs(glo) <= r.tol_f:
        return lo
    if abs(ghi) <= r.tol_f:
        return hi
    if glo * ghi > 0:
        raise NoSignChange(f"g({lo})={glo:.3e} and g({hi})={ghi:.3e} share a sign")
    try:
        return optimize.brentq(
            g, lo, hi, xtol=r.tol_x, rtol=4 * np.finfo(float).eps, maxiter=r.max_iter
        )
    except RuntimeError as exc:
        raise MaxIterations(str(exc)) from exc
