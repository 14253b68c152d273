"""Independent eigenvalues from Numerov shooting.

The oracle knows only V(x).  Its levels are compared with the closed
forms, and the grid is refined once to show the convergence order.

Run with ``python3 demos/numerov_oracle.py``.
"""

from ptsip import catalog as cat
from ptsip.oracle import GridSpec, default_domain, solve_eigenvalue


def main():
    for name in ("morse", "scarf-1", "kepler-coulomb"):
        spec = cat.reference_spec(name)
        print(name)
        for n in range(int(min(cat.level_count(spec), 4))):
            r = solve_eigenvalue(spec, n)
            e = cat.closed_form_level(spec, n)
            print(f"  n={n} nodes={r.node_count} E_numerov={r.energy:.10f} E_exact={e:.10f} "
                  f"rel err={abs(r.energy - e) / (1 + abs(e)):.1e}")

    spec = cat.reference_spec("harmonic")
    fine = default_domain(spec, 2.0, 4001)
    print("\nharmonic n=1, grid refinement")
    prev = None
    for pts in (1001, 2001, 4001):
        err = abs(solve_eigenvalue(spec, 1, GridSpec(fine.x_min, fine.x_max, pts)).energy - 2.0)
        ratio = "" if prev is None else f" ratio {prev / err:.1f}"
        print(f"  {pts:5d} points: error {err:.3e}{ratio}")
        prev = err


if __name__ == "__main__":
    main()
