"""Four-way spectrum table written as CSV through the command-line entry point.

Run with ``python3 demos/spectrum_table.py [out.csv]``.
"""

import sys

from ptsip.cli import main as ptsip

if __name__ == "__main__":
    argv = ["spectrum", "--potential", "eckart", "--params", "A=2,B=20,alpha=1", "--format", "csv"]
    if len(sys.argv) > 1:
        argv += ["--out", sys.argv[1]]
    sys.exit(ptsip(argv))
