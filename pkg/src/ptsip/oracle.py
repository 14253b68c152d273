"""Independent eigenvalue oracle: Numerov shooting on a uniform grid.

Solves ``psi'' + (E - V) psi = 0`` knowing nothing about superpotentials
or quantization rules; only :func:`ptsip.catalog.evaluate_potential` is used.

Levels are located in three steps.  Counting sign changes of a single
outward sweep gives the number of eigenvalues below ``E`` (Sturm
oscillation), which brackets level ``n`` uniquely.  Inside that bracket the
left and right solutions are matched at the outermost classical turning
point and the normalised Wronskian is driven to zero with Brent's method.
A coarse grid finds the level and a fine grid refines it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from .catalog import PotentialSpec, continuum_threshold, level_count
from .errors import DomainError, NoConvergence, Unbound

__all__ = [
    "GridSpec",
    "EigenResult",
    "default_domain",
    "numerov_sweep",
    "node_count_below",
    "solve_eigenvalue",
]

DECAY_ACTION = 24.0
"""WKB attenuation ``int sqrt(V - E) dx`` required beyond the outer turning point."""

MAX_EXTENT = 1e6
_RENORM = 1e100
_COARSE_POINTS = 2001


@dataclass(frozen=True)
class GridSpec:
    x_min: float
    x_max: float
    n_points: int = 20001
    boundary_offset: float = 1e-6

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError(f"need x_min < x_max, got [{self.x_min}, {self.x_max}]")
        if self.n_points < 1001 or self.n_points % 2 == 0:
            raise ValueError(f"n_points must be odd and >= 1001, got {self.n_points}")

    @property
    def h(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def with_points(self, n_points: int) -> "GridSpec":
        return GridSpec(self.x_min, self.x_max, n_points, self.boundary_offset)


@dataclass(frozen=True)
class EigenResult:
    energy: float
    node_count: int
    match_residual: float


# ---------------------------------------------------------------------------
# domain


def _potential(spec, x):
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        return np.asarray(spec.model.potential(np.asarray(x, dtype=float)), dtype=float)


def _open_edge(spec, x0, direction, E, scale):
    """March from ``x0`` until the solution has decayed far enough."""
    step = scale / 200.0
    x = x0
    v = float(_potential(spec, x))
    s = 0.0
    travelled = 0.0
    while True:
        x_new = x + direction * step
        v_new = float(_potential(spec, x_new))
        if not math.isfinite(v_new):
            raise DomainError(f"potential not finite at x = {x_new}")
        k0 = math.sqrt(max(v - E, 0.0))
        k1 = math.sqrt(max(v_new - E, 0.0))
        s += 0.5 * (k0 + k1) * step
        x, v = x_new, v_new
        travelled += step
        if s >= DECAY_ACTION and v > E:
            return x
        if travelled > MAX_EXTENT:
            raise DomainError(
                f"no classically forbidden edge within {MAX_EXTENT:g} of the well at E = {E}"
            )
        step *= 1.02


def default_domain(
    spec: PotentialSpec, E_hint: float, n_points: int = 20001, boundary_offset: float = 1e-6
) -> GridSpec:
    """Integration interval for levels near ``E_hint``.

    Hard walls and coordinate singularities are inset by
    ``boundary_offset``.  Open ends are pushed out until the WKB decay
    exponent beyond the turning point reaches :data:`DECAY_ACTION`.

    Raises:
        DomainError: ``E_hint`` is not bound (no forbidden edge below the cap).
    """
    lo, hi = spec.model.domain()
    wlo, whi = spec.model.window()
    xs = np.linspace(wlo, whi, 2001)
    x_c = float(xs[np.argmin(_potential(spec, xs))])
    scale = whi - wlo
    left = lo + boundary_offset if math.isfinite(lo) else _open_edge(spec, x_c, -1.0, E_hint, scale)
    right = hi - boundary_offset if math.isfinite(hi) else _open_edge(spec, x_c, 1.0, E_hint, scale)
    return GridSpec(left, right, n_points, boundary_offset)


# ---------------------------------------------------------------------------
# Numerov kernels


class _Grid:
    """Grid nodes with the potential cached."""

    def __init__(self, spec: PotentialSpec, grid: GridSpec):
        self.grid = grid
        self.h = grid.h
        self.x = grid.nodes()
        self.v = _potential(spec, self.x)
        self.i_min = int(np.nanargmin(self.v))

    def f(self, E):
        with np.errstate(invalid="ignore"):
            f = 1.0 + (self.h * self.h / 12.0) * (E - self.v)
        f[~np.isfinite(f)] = -1.0
        return f

    def walls(self, f):
        """Effective Dirichlet indices: innermost points where Numerov breaks down."""
        left = np.nonzero(f[: self.i_min] <= 0)[0]
        right = np.nonzero(f[self.i_min :] <= 0)[0]
        i0 = int(left[-1]) if left.size else 0
        i1 = int(right[0]) + self.i_min if right.size else len(f) - 1
        return i0, i1

    def match_index(self, E, i0, i1):
        allowed = np.nonzero(self.v[i0 : i1 + 1] <= E)[0]
        m = int(allowed[-1]) + i0 if allowed.size else self.i_min
        return min(max(m, i0 + 2), i1 - 2)


def _march(f, start, stop, step):
    """Numerov from a node at ``start`` to ``stop``.

    Returns the number of sign changes strictly before ``stop`` and the
    last three values (ordered along the march).
    """
    pp, p, c = 0.0, 0.0, 1.0
    fp, fc = f[start], f[start + step]
    changes = 0
    i = start + step
    while i != stop:
        fn = f[i + step]
        nxt = ((12.0 - 10.0 * fc) * c - fp * p) / fn
        if nxt * c < 0.0 and i + step != stop:
            changes += 1
        pp, p, c = p, c, nxt
        fp, fc = fc, fn
        if abs(c) > _RENORM:
            pp /= _RENORM
            p /= _RENORM
            c /= _RENORM
        i += step
    return changes, (pp, p, c)


def _count(g: _Grid, E: float) -> int:
    f = g.f(E)
    i0, i1 = g.walls(f)
    changes, _ = _march(f.tolist(), i0, i1, 1)
    return changes


def _mismatch(g: _Grid, E: float, m: int):
    f = g.f(E)
    i0, i1 = g.walls(f)
    m = min(max(m, i0 + 2), i1 - 2)
    fl = f.tolist()
    nl, (l0, l1, l2) = _march(fl, i0, m + 1, 1)
    nr, (r0, r1, r2) = _march(fl, i1, m - 1, -1)
    # left triple is (m-1, m, m+1); right triple is (m+1, m, m-1)
    h2 = 2.0 * g.h
    dl = (l2 - l0) / h2
    dr = (r0 - r2) / h2
    # left counts pairs up to index m, right counts pairs from m on
    nodes = nl + nr
    g_val = (l1 * dr - r1 * dl) / (math.hypot(l1, dl) * math.hypot(r1, dr))
    return g_val, nodes


def numerov_sweep(spec: PotentialSpec, E: float, grid: GridSpec) -> tuple[int, float]:
    """Node count and normalised log-derivative mismatch at energy ``E``.

    The left solution is integrated up to the outermost classical turning
    point and the right solution down to it.  The node count is that of
    the matched solution.
    """
    g = _Grid(spec, grid)
    f = g.f(E)
    i0, i1 = g.walls(f)
    m = g.match_index(E, i0, i1)
    res, nodes = _mismatch(g, E, m)
    return nodes, abs(res)


def node_count_below(spec: PotentialSpec, E: float, grid: GridSpec) -> int:
    """Number of grid eigenvalues below ``E`` (sign changes of one outward sweep)."""
    return _count(_Grid(spec, grid), E)


# ---------------------------------------------------------------------------
# eigenvalue search


def _count_bisect(g, n, lo, hi, c_lo, c_hi, width):
    """Shrink ``[lo, hi]`` until it holds exactly level ``n``."""
    for _ in range(200):
        if c_lo == n and c_hi == n + 1:
            return lo, hi
        mid = 0.5 * (lo + hi)
        c = _count(g, mid)
        if c <= n:
            lo, c_lo = mid, c
        else:
            hi, c_hi = mid, c
        if hi - lo < width:
            break
    if c_lo == n and c_hi == n + 1:
        return lo, hi
    raise NoConvergence(f"could not isolate level {n} in [{lo}, {hi}]")


def _refine(g, n, lo, hi, tol):
    m = g.match_index(0.5 * (lo + hi), *g.walls(g.f(0.5 * (lo + hi))))
    G = lambda E: _mismatch(g, E, m)[0]  # noqa: E731
    # the zero of G and the node-count edge differ by discretisation error,
    # so a bracket edge sitting on the level may need nudging outward
    width = hi - lo
    pad = 1e-10 * max(1.0, abs(lo), abs(hi))
    g_lo, g_hi = G(lo), G(hi)
    while g_lo * g_hi > 0:
        if pad > width:
            raise NoConvergence(f"mismatch has no sign change over [{lo}, {hi}]")
        lo, hi = lo - pad, hi + pad
        g_lo, g_hi = G(lo), G(hi)
        pad *= 4
    E = optimize.brentq(G, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=200)
    res, nodes = _mismatch(g, E, m)
    return EigenResult(energy=E, node_count=nodes, match_residual=abs(res))


def _coarse_level(spec, n, grid, thr, tol):
    """Find level ``n`` on a coarse grid without any prior estimate."""
    if grid is not None:
        gc = _Grid(spec, grid.with_points(_COARSE_POINTS))
        e_lo = float(np.nanmin(gc.v))
        step = max(1.0, abs(e_lo))
        e_hi = e_lo + step
        while _count(gc, e_hi) < n + 1:
            e_lo, step = e_hi, 2 * step
            e_hi = e_lo + step
            if step > 1e12:
                raise NoConvergence(f"level {n} not found below {e_hi}")
    else:
        lo, hi = spec.model.window()
        e_lo = float(np.nanmin(_potential(spec, np.linspace(lo, hi, 2001))))
        step = max(1.0, abs(e_lo))
        for _ in range(60):
            # finite thresholds are approached geometrically so the domain stays finite
            e_hi = thr - 0.5 * (thr - e_lo) if math.isfinite(thr) else e_lo + step
            gc = _Grid(spec, default_domain(spec, e_hi, _COARSE_POINTS))
            if _count(gc, e_hi) >= n + 1:
                break
            e_lo, step = e_hi, 2 * step
        else:
            raise Unbound(f"level {n} not found below the threshold {thr}")
    c_lo = _count(gc, e_lo)
    if c_lo > n:
        e_lo = float(np.nanmin(gc.v))
        c_lo = _count(gc, e_lo)
    lo, hi = _count_bisect(gc, n, e_lo, e_hi, c_lo, _count(gc, e_hi), 1e-14 * max(1.0, abs(e_hi)))
    return _refine(gc, n, lo, hi, tol).energy


def solve_eigenvalue(
    spec: PotentialSpec,
    n: int,
    grid: GridSpec | None = None,
    tol: float = 1e-10,
    e_guess: float | None = None,
) -> EigenResult:
    """Level ``n`` of ``spec`` by Numerov shooting.

    Args:
        spec: Potential to solve.
        n: Quantum number (node count).
        grid: Fine grid.  Defaults to :func:`default_domain` around the level.
        tol: Absolute energy tolerance of the final root search.
        e_guess: Optional starting estimate.  It only positions the
            search window; the bracket is always certified by node counts.

    Raises:
        Unbound: ``n`` is not a bound level.
        NoConvergence: the level could not be isolated.
    """
    if n < 0 or n >= level_count(spec):
        raise Unbound(f"{spec.id.value} has no bound level n={n}")
    if tol < 1e-14:
        raise ValueError("tol below 1e-14 is meaningless for this oracle")
    thr = continuum_threshold(spec)
    e_c = e_guess if e_guess is not None else _coarse_level(spec, n, grid, thr, tol)

    fine = grid if grid is not None else default_domain(spec, e_c)
    g = _Grid(spec, fine)
    cap = thr if math.isfinite(thr) else math.inf
    delta = 1e-3 * (1.0 + abs(e_c))
    lo = e_c - delta
    c_lo = _count(g, lo)
    while c_lo > n:
        delta *= 2
        lo = e_c - delta
        c_lo = _count(g, lo)
    delta = 1e-3 * (1.0 + abs(e_c))
    hi = min(e_c + delta, cap)
    c_hi = _count(g, hi)
    while c_hi < n + 1:
        if hi >= cap:
            raise NoConvergence(f"level {n} not below threshold on this grid")
        delta *= 2
        hi = min(e_c + delta, cap)
        c_hi = _count(g, hi)
    lo, hi = _count_bisect(g, n, lo, hi, c_lo, c_hi, 1e-14 * max(1.0, abs(hi)))
    return _refine(g, n, lo, hi, tol)
