"""Compare the two quantization rules on one potential.

At the exact levels the SWKB action is n pi with no correction, while the
proper action carries a constant offset equal to its value at the ground
level.

Run with ``python3 demos/swkb_vs_proper.py [potential]``.
"""

import math
import sys

from ptsip import catalog as cat
from ptsip.quantization import ActionMethod, pq_action, pq_ground_closed, swkb_action


def main(name="poschl-teller-1"):
    spec = cat.reference_spec(name)
    g0 = pq_ground_closed(spec)
    print(f"{name} {dict(spec.params)}")
    print(f"closed-form proper action at E0: {g0:.12f}\n")
    print(f"{'n':>2s} {'E_n':>12s} {'I_swkb/pi':>12s} {'(I_pq - n pi)':>15s} {'raw quad':>15s}")
    top = int(min(cat.level_count(spec), 8))
    for n in range(top):
        e = cat.closed_form_level(spec, n)
        s = swkb_action(spec, e).value
        p = pq_action(spec, e).value - n * math.pi
        r = pq_action(spec, e, ActionMethod.RAW_QUADRATURE).value - n * math.pi
        print(f"{n:2d} {e:12.6f} {s / math.pi:12.9f} {p:15.12f} {r:15.12f}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
