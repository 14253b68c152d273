"""Walk the potential catalog: canonical coefficients, superpotentials and levels.

Run with ``python3 demos/catalog_tour.py``.
"""

import numpy as np

from ptsip import catalog as cat


def main():
    print(f"{'potential':16s} {'category':10s} {'a':>9s} {'b':>9s} {'levels':>7s} {'max |Riccati|':>14s}")
    for pid in cat.CATALOG:
        spec = cat.reference_spec(pid)
        c = spec.model.coeffs()
        xs = cat.sample_grid(spec, 200)
        ric = np.max(np.abs(cat.riccati_residual(spec, xs)))
        count = cat.level_count(spec)
        shown = "inf" if count == cat.UNBOUNDED else str(count)
        print(f"{pid.value:16s} {spec.category.value:10s} {c.a:9.4f} {c.b:9.4f} {shown:>7s} {ric:14.2e}")

    spec = cat.reference_spec("rosen-morse-2")
    form = cat.canonical_form(spec)
    print("\nRosen-Morse II in y = tanh(alpha x):")
    print(f"  V(y) = {form.lambda2:g} y^2 {form.lambda1:+g} y {form.lambda0:+g}")
    print("  first levels:", [round(cat.closed_form_level(spec, n), 6) for n in range(cat.level_count(spec))])
    print(f"  continuum threshold: {cat.continuum_threshold(spec):g}")


if __name__ == "__main__":
    main()
