"""Command-line front end: point evaluation, accuracy table, deviation curves, Coulomb waves.

Exit status is 0 on success, 1 on domain/runtime errors and 2 on usage
errors (argparse's own convention).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .coulomb import (CoulombParams, coulomb_wave_exact, coulomb_wave_tra,
                      schrodinger_residual)
from .errors import KummerBesselError
from .kummer import HypergeometricParams, hyp1f1_oracle
from .representation import eval_rep18, eval_rep19, relative_deviation

METHODS = ("oracle", "rep18", "rep19")


@dataclass(frozen=True)
class TableRow:
    x: float
    exact: float
    rep18: float
    rep19: float
    abs_err_18: float
    abs_err_19: float

    @classmethod
    def build(cls, x: float, exact: float, rep18: float, rep19: float) -> "TableRow":
        return cls(x, exact, rep18, rep19, abs(rep18 - exact), abs(rep19 - exact))


def _fmt(v) -> str:
    # shortest round-trip repr; blank for missing cells
    if v is None:
        return ""
    if isinstance(v, complex):
        return repr(v.real) if v.imag == 0.0 else repr(v)
    return repr(float(v)) if isinstance(v, float) else str(v)


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected re[,im], got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re[,im], got {text!r}") from None
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def _parse_int_list(text: str) -> list[int]:
    try:
        vals = [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected int or comma list, got {text!r}") from None
    if not vals or any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("term counts must be non-negative")
    return vals


def _parse_methods(text: str) -> list[str]:
    vals = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in vals if m not in METHODS]
    if bad or not vals:
        raise argparse.ArgumentTypeError(
            f"methods must be a comma list drawn from {','.join(METHODS)}")
    return vals


def _grid(lo: float, hi: float, steps: int) -> list[float]:
    # half-open grid (lo, hi]
    h = (hi - lo) / steps
    return [lo + i * h for i in range(1, steps + 1)]


def _emit(records: list[dict], fields: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(records, out, indent=1)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fields)
    for rec in records:
        w.writerow([_fmt(rec[f]) for f in fields])


def _write(records, fields, args, path=None) -> None:
    path = path or args.out
    if path is None:
        _emit(records, fields, args.format, sys.stdout)
        return
    buf = io.StringIO()
    _emit(records, fields, args.format, buf)
    Path(path).write_text(buf.getvalue())


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def cmd_eval(args) -> int:
    p = HypergeometricParams(args.a, args.b, args.x)
    n = args.N[0]
    status = 0
    for method in args.methods:
        try:
            if method == "oracle":
                res = hyp1f1_oracle(p)
            elif method == "rep18":
                res = eval_rep18(p, n)
            else:
                res = eval_rep19(p, n)
        except KummerBesselError as exc:
            print(f"error: {method}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"{method}\t{_fmt(res.value)}\tterms={res.terms_used}\t"
              f"converged={res.converged}")
        if method == "oracle" and not res.converged:
            status = 1
    return status


def table1_rows(a: complex, b: float, n_terms: int, xs: list[float]) -> list[TableRow]:
    rows = []
    for x in xs:
        p = HypergeometricParams(a, b, x)
        rows.append(TableRow.build(x, hyp1f1_oracle(p).value.real,
                                   eval_rep18(p, n_terms).value.real,
                                   eval_rep19(p, n_terms).value.real))
    return rows


def cmd_table1(args) -> int:
    rows = table1_rows(args.a, args.b, args.N[0],
                       _grid(args.xmin, args.xmax, args.steps))
    fields = ["x", "exact", "rep18", "rep19", "abs_err_18", "abs_err_19"]
    _write([vars(r) for r in rows], fields, args)
    return 0


def deviation_records(a: float, b: float, n_terms: int, xs: list[float],
                      methods: list[str]) -> list[dict]:
    records = []
    for x in xs:
        rec = {"x": x}
        for m in methods:
            try:
                rec[f"delta_{m}"] = relative_deviation(a, b, x, n_terms, m)
            except KummerBesselError as exc:
                _warn(f"N={n_terms} x={x!r} {m}: {exc}")
                rec[f"delta_{m}"] = None
        records.append(rec)
    return records


def cmd_deviation(args) -> int:
    if args.a.imag != 0.0:
        raise KummerBesselError("deviation curves need real a")
    methods = [m for m in args.methods if m != "oracle"] or ["rep18", "rep19"]
    xs = _grid(args.xmin, args.xmax, args.steps)
    fields = ["x"] + [f"delta_{m}" for m in methods]
    for n in args.N:
        records = deviation_records(args.a.real, args.b, n, xs, methods)
        path = None
        if args.out is not None and len(args.N) > 1:
            out = Path(args.out)
            path = out.with_name(f"{out.stem}_N{n}{out.suffix}")
        _write(records, fields, args, path)
    return 0


def cmd_coulomb(args) -> int:
    p = CoulombParams(args.Z, args.E, args.l)
    records = []
    for r in _grid(0.0, args.rmax, args.steps):
        n = args.N[0] if args.N_given else None
        tra = coulomb_wave_tra(p, r, n).psi
        exact = coulomb_wave_exact(p, r).psi
        rel = abs(tra - exact) / abs(exact) if exact != 0.0 else math.inf
        records.append({"r": r, "psi_tra": tra, "psi_exact": exact,
                        "rel_diff": rel,
                        "schrodinger_residual": schrodinger_residual(p, r)})
    fields = ["r", "psi_tra", "psi_exact", "rel_diff", "schrodinger_residual"]
    _write(records, fields, args)
    return 0


COMMANDS = {"eval": cmd_eval, "table1": cmd_table1,
            "deviation": cmd_deviation, "coulomb": cmd_coulomb}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_parse_complex, default=complex(2.5),
                        help="parameter a as re[,im] (default 2.5)")
    common.add_argument("--b", type=float, default=3.7, help="parameter b (default 3.7)")
    common.add_argument("--N", "--n", dest="N", type=_parse_int_list, default=None,
                        help="truncation order, or comma list for deviation")
    common.add_argument("--methods", type=_parse_methods,
                        default=list(METHODS), help="comma list of oracle,rep18,rep19")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--xmin", type=float, default=0.0)
    grid.add_argument("--xmax", type=float, default=10.0)
    grid.add_argument("--steps", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="kummerbessel",
        description="Bessel-series representations of 1F1 and Coulomb waves")
    sub = parser.add_subparsers(dest="command", required=True)
    p_eval = sub.add_parser("eval", parents=[common], help="evaluate at one point")
    p_eval.add_argument("--x", type=float, required=True)
    sub.add_parser("table1", parents=[common, grid],
                   help="accuracy table of both series against the oracle")
    sub.add_parser("deviation", parents=[common, grid],
                   help="signed relative deviation curves as CSV")
    p_coul = sub.add_parser("coulomb", parents=[common],
                            help="Coulomb wavefunction by series and closed form")
    p_coul.add_argument("--Z", type=float, default=1.0)
    p_coul.add_argument("--E", type=float, default=0.5)
    p_coul.add_argument("--l", type=int, default=0)
    p_coul.add_argument("--rmax", type=float, default=10.0)
    p_coul.add_argument("--steps", type=int, default=20)
    return parser


_DEFAULT_STEPS = {"table1": 10, "deviation": 100}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.N_given = args.N is not None
    if args.N is None:
        args.N = [20] if args.command in ("eval", "table1") else [5]
    if args.command in _DEFAULT_STEPS and args.steps is None:
        args.steps = _DEFAULT_STEPS[args.command]
    steps = getattr(args, "steps", 1)
    if steps is not None and steps < 1:
        parser.error("--steps must be >= 1")
    if args.command in _DEFAULT_STEPS and not args.xmin < args.xmax:
        parser.error("--xmin must be below --xmax")
    if args.command != "deviation" and len(args.N) > 1:
        parser.error("a list of N values is only accepted by 'deviation'")
    if args.command == "coulomb" and not args.rmax > 0:
        parser.error("--rmax must be positive")
    try:
        return COMMANDS[args.command](args)
    except KummerBesselError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
