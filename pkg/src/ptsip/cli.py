"""Command-line interface: ``ptsip {list,eval,spectrum,verify,quadcheck}``.

Exit codes: 0 success, 1 usage or parameter error, 2 a check or report row
was flagged.  Tolerances can be overridden through ``SWKB_TOL_*``
environment variables (for example ``SWKB_TOL_ORACLE=1e-4``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager

import numpy as np

from . import catalog as cat
from . import checks
from .catalog import CATALOG, MapSign, PotentialId, PotentialSpec
from .errors import PtsipError
from .numerics import QuadratureSpec, fixed_order_rule, integrate_sqrt_endpoints
from .quantization import moment_integral_first, moment_integral_second
from .solver import Tolerances, report_flagged, spectrum_report

EXIT_OK, EXIT_USAGE, EXIT_FLAGGED = 0, 1, 2
CSV_HEADER = ["n", "e_closed", "e_swkb", "e_pq", "e_oracle", "swkb_residual", "gamma"]
UNITS = "hbar=2m=1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _num(v):
    """12 significant digits; NaN/inf become ``None`` in JSON."""
    if v is None:
        return None
    v = float(v)
    if not math.isfinite(v):
        return None
    return float(f"{v:.12g}")


def _fmt(v) -> str:
    if v is None:
        return "nan"
    v = float(v)
    return "nan" if math.isnan(v) else f"{v:.12g}"


def parse_params(items: list[str] | None) -> dict[str, float]:
    """``["A=2,B=0.5", "alpha=1"]`` -> ``{"A": 2.0, "B": 0.5, "alpha": 1.0}``."""
    out: dict[str, float] = {}
    for item in items or []:
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise UsageError(f"parameter {part!r} is not key=value")
            k, v = part.split("=", 1)
            try:
                out[k.strip()] = float(v)
            except ValueError:
                raise UsageError(f"parameter {k.strip()!r} has non-numeric value {v!r}") from None
    return out


def _spec(args) -> PotentialSpec:
    pid = PotentialId.parse(args.potential)
    params = parse_params(args.params)
    if not params:
        if pid not in cat.REFERENCE_PARAMS:
            raise UsageError(f"{pid.value} needs --params")
        params = dict(cat.REFERENCE_PARAMS[pid])
    return PotentialSpec(pid, params)


@contextmanager
def _sink(path):
    if path:
        with open(path, "w", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _table(header, rows) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def cmd_list(args) -> int:
    ids = [p for p in CATALOG if args.category is None or cat.describe(p)["category"] == args.category]
    desc = [cat.describe(p) for p in ids]
    if args.format == "json":
        text = json.dumps(desc, indent=2) + "\n"
    else:
        header = ["name", "category", "params", "constraints", "spectrum"]
        rows = [
            [d["name"], d["category"] + (" (exceptional)" if d["exceptional"] else ""),
             ",".join(d["params"]), d["constraints"], d["spectrum"]]
            for d in desc
        ]
        text = _csv(header, rows) if args.format == "csv" else _table(header, rows)
    with _sink(args.out) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = _spec(args)
    xs = np.asarray(args.x, dtype=float)
    v = np.atleast_1d(cat.evaluate_potential(spec, xs))
    y, dy = (np.atleast_1d(t) for t in cat.evaluate_variable_map(spec, xs))
    w = np.atleast_1d(cat.evaluate_superpotential(spec, xs))
    r = np.atleast_1d(cat.riccati_residual(spec, xs))
    header = ["x", "V", "y", "dy_dx", "W", "riccati_residual"]
    data = list(zip(xs, v, y, dy, w, r))
    if args.format == "json":
        text = json.dumps(
            {"meta": _meta(spec), "rows": [dict(zip(header, map(_num, row))) for row in data]}, indent=2
        ) + "\n"
    else:
        rows = [[_fmt(c) for c in row] for row in data]
        text = _csv(header, rows) if args.format == "csv" else _table(header, rows)
    with _sink(args.out) as fh:
        fh.write(text)
    return EXIT_OK


def _meta(spec):
    return {"potential": spec.id.value, "params": dict(spec.params), "units": UNITS}


def cmd_spectrum(args) -> int:
    spec = _spec(args)
    tol = Tolerances.from_env()
    rows = spectrum_report(spec, args.n_max, with_oracle=not args.no_oracle, tolerances=tol)
    values = [
        [r.n, r.e_closed, r.e_swkb, r.e_pq, r.e_oracle, r.swkb_action_residual, r.gamma_value] for r in rows
    ]
    if args.format == "json":
        payload = {
            "meta": _meta(spec),
            "rows": [
                dict(zip(CSV_HEADER, [r[0]] + [_num(v) for v in r[1:]]), flagged=row.flagged, note=row.note)
                for r, row in zip(values, rows)
            ],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        cells = [[str(r[0])] + [_fmt(v) for v in r[1:]] for r in values]
        if args.format == "csv":
            text = _csv(CSV_HEADER, cells)
        else:
            text = _table(CSV_HEADER + ["flag"], [c + [row.note] for c, row in zip(cells, rows)])
    with _sink(args.out) as fh:
        fh.write(text)
    flagged = report_flagged(rows, tol)
    if flagged and args.format == "csv":
        for row in rows:
            if row.flagged:
                print(f"n={row.n}: {row.note}", file=sys.stderr)
    return EXIT_FLAGGED if flagged else EXIT_OK


_DEFAULT_CHECKS = [
    "moment-integrals", "riccati", "reconstruction", "master-formula",
    "swkb-quantization", "gamma", "three-way", "equivalence", "spectrum",
]


def _tol_for(name, tol: Tolerances):
    return {
        "riccati": {"tol": tol.riccati},
        "reconstruction": {"tol": tol.reconstruction},
        "swkb-quantization": {"tol": tol.action},
        "gamma": {"tol": tol.action, "tol_mean": tol.gamma},
        "three-way": {"tol": tol.three_way},
        "equivalence": {"tol": tol.equivalence},
        "spectrum": {"tol": tol.level},
        "oracle": {"tol": tol.oracle},
    }.get(name, {})


def cmd_verify(args) -> int:
    tol = Tolerances.from_env()
    names = args.check or list(_DEFAULT_CHECKS)
    unknown = [n for n in names if n not in checks.CHECKS and n not in ("moment-integrals", "grid-halving")]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}")
    if args.all:
        specs = [cat.reference_spec(p) for p in CATALOG]
    elif args.potential:
        specs = [_spec(args)]
    elif all(n in ("moment-integrals", "grid-halving") for n in names):
        specs = []
    else:
        raise UsageError("verify needs --all or --potential (or only global checks)")

    results = []
    for name in names:
        if name == "moment-integrals":
            results += checks.check_moment_integrals(tol=tol.moment)
        elif name == "grid-halving":
            results.append(checks.check_grid_halving())
        else:
            fn = checks.CHECKS[name]
            for spec in specs:
                try:
                    results.append(fn(spec, **_tol_for(name, tol)))
                except PtsipError as exc:
                    results.append(checks.CheckResult(name, spec.id.value, math.inf, 0.0, 0, str(exc)))

    ok = all(r.passed for r in results)
    if args.format == "json":
        text = json.dumps(
            {
                "units": UNITS,
                "passed": ok,
                "checks": [
                    {"check": r.name, "subject": r.subject, "max_residual": _num(r.max_residual),
                     "tolerance": r.tolerance, "samples": r.samples, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
            },
            indent=2,
        ) + "\n"
    else:
        header = ["check", "subject", "max_residual", "tolerance", "samples", "status", "detail"]
        rows = [
            [r.name, r.subject, f"{r.max_residual:.3e}", f"{r.tolerance:.0e}", r.samples,
             "PASS" if r.passed else "FAIL", r.detail]
            for r in results
        ]
        text = _csv(header, rows) if args.format == "csv" else _table(header, rows)
        if args.format == "table":
            text += f"\n{sum(r.passed for r in results)}/{len(results)} checks passed\n"
    with _sink(args.out) as fh:
        fh.write(text)
    return EXIT_OK if ok else EXIT_FLAGGED


def _beta_moment(k: int) -> float:
    """``int_{-1}^{1} t^k sqrt(1 - t^2) dt``."""
    if k % 2:
        return 0.0
    return math.gamma((k + 1) / 2) * math.gamma(1.5) / math.gamma(k / 2 + 2)


def cmd_quadcheck(args) -> int:
    """Exercise the square-root endpoint quadrature against known integrals."""
    rows = []

    def add(label, got, want, tol):
        rows.append([label, f"{got:.15g}", f"{want:.15g}", f"{abs(got - want):.2e}", "PASS" if abs(got - want) < tol else "FAIL"])

    q = QuadratureSpec(-1.0, 1.0)
    add("semicircle", integrate_sqrt_endpoints(lambda t: np.sqrt(np.maximum((1 - t) * (1 + t), 0)), q)[0],
        math.pi / 2, 1e-13)
    add("sqrt(4-t^2)/(1+t^2)",
        integrate_sqrt_endpoints(lambda t: np.sqrt(np.maximum(4 - t * t, 0)) / (1 + t * t), QuadratureSpec(-2.0, 2.0))[0],
        moment_integral_first(-2.0, 2.0, MapSign.PLUS), 1e-10)
    add("second+ [0.01, 1]",
        integrate_sqrt_endpoints(
            lambda t: np.sqrt(np.maximum((1 - t) * (t - 0.01), 0)) / (t * (1 + t)), QuadratureSpec(0.01, 1.0)
        )[0],
        moment_integral_second(0.01, 1.0, MapSign.PLUS), 1e-10)
    for k in range(7):
        got = fixed_order_rule(lambda t: t**k * np.sqrt(np.maximum(1 - t * t, 0)), -1.0, 1.0, 64)
        add(f"t^{k} sqrt(1-t^2), order 64", got, _beta_moment(k), 1e-13)
    header = ["integral", "quadrature", "reference", "abs_error", "status"]
    text = _csv(header, rows) if args.format == "csv" else _table(header, rows)
    with _sink(args.out) as fh:
        fh.write(text)
    return EXIT_OK if all(r[-1] == "PASS" for r in rows) else EXIT_FLAGGED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ptsip", description="SWKB and proper quantization of shape-invariant potentials (hbar=2m=1).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=("table", "csv", "json")):
        sp.add_argument("--format", choices=formats, default="table")
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    def potential(sp, required):
        sp.add_argument("--potential", required=required, help="catalog name, e.g. rosen-morse-2")
        sp.add_argument("--params", action="append", metavar="K=V[,K=V]",
                        help="parameters, e.g. A=2,B=0.5,alpha=1 (default: reference set)")

    sp = sub.add_parser("list", help="list catalog potentials")
    sp.add_argument("--category", choices=("first", "second"))
    common(sp)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("eval", help="evaluate V, y, y', W and the Riccati residual at points")
    potential(sp, True)
    sp.add_argument("--x", type=float, nargs="+", required=True)
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("spectrum", help="closed-form, SWKB, proper and Numerov levels")
    potential(sp, True)
    sp.add_argument("--n-max", type=int, default=10)
    sp.add_argument("--no-oracle", action="store_true", help="skip the Numerov column")
    common(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="run verification checks")
    potential(sp, False)
    sp.add_argument("--all", action="store_true", help="every catalog potential at its reference parameters")
    sp.add_argument("--check", action="append",
                    choices=sorted(list(checks.CHECKS) + ["moment-integrals", "grid-halving"]))
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("quadcheck", help="self-test of the endpoint quadrature")
    common(sp, ("table", "csv"))
    sp.set_defaults(func=cmd_quadcheck)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"ptsip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PtsipError, ValueError) as exc:
        print(f"ptsip: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
