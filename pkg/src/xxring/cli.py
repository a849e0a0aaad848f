"""Command-line front end.

Commands: eval (one concurrence value), sweep (CSV over a B x tau grid),
figure (preset data for the four figures), limits (zero-temperature and
threshold checks against their analytic targets), verify (closed-form vs
brute-force cross-check). Exit codes: 0 success, 1 a check failed, 2 invalid
input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import oracle
from .entanglement import c12_zero_t_limit, c13_low_t_approx, concurrence_pair
from .errors import ToleranceExceeded, XXRingError
from .model import ModelParams
from .sweeps import (
    SweepConfig,
    figure_preset,
    figure_rows,
    format_float,
    parse_range,
    sweep_rows,
    write_csv,
)
from .thermal import ThermalParams

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_IO = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xxring",
        description="Thermal pairwise concurrence of the 3-qubit XX ring with a site-3 impurity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="print one concurrence value")
    p_eval.add_argument("--j", type=int, choices=(1, -1), required=True, help="sign of J")
    p_eval.add_argument("--b", type=float, required=True, help="impurity field B")
    p_eval.add_argument("--tau", type=float, required=True, help="scaled temperature kT/|J|")
    p_eval.add_argument("--pair", type=int, choices=(12, 13, 23), default=12)

    p_sweep = sub.add_parser("sweep", help="write a concurrence CSV over a B x tau grid")
    p_sweep.add_argument("--j", type=int, choices=(1, -1))
    p_sweep.add_argument("--pair", type=int, choices=(12, 13, 23))
    p_sweep.add_argument("--b", type=float, action="append",
                         help="explicit B value (repeatable)")
    p_sweep.add_argument("--b-range", help="B grid as min:max:count")
    p_sweep.add_argument("--tau", type=float, action="append",
                         help="explicit tau value (repeatable)")
    p_sweep.add_argument("--tau-range", help="tau grid as min:max:count")
    p_sweep.add_argument("--out", help="output CSV path")
    p_sweep.add_argument("--config", help="key=value file supplying defaults for the flags")
    p_sweep.add_argument("--threads", type=int)

    p_fig = sub.add_parser("figure", help="write the preset CSV for one figure")
    p_fig.add_argument("id", type=int, help="figure id, 1..4")
    p_fig.add_argument("--out", help="output CSV path (default fig<id>.csv)")
    p_fig.add_argument("--threads", type=int, default=1)

    sub.add_parser("limits", help="evaluate the tabulated limits against their targets")

    p_verify = sub.add_parser("verify", help="run the closed-form vs brute-force cross-check")
    p_verify.add_argument("--tau-min", type=float)
    p_verify.add_argument("--tau-max", type=float)
    p_verify.add_argument("--tau-count", type=int, default=7)
    p_verify.add_argument("--b-min", type=float)
    p_verify.add_argument("--b-max", type=float)
    p_verify.add_argument("--b-count", type=int, default=7)

    return parser


def _cmd_eval(args) -> int:
    c = concurrence_pair(
        ModelParams(j=float(args.j), b=args.b),
        ThermalParams(tau=args.tau, j_sign=args.j),
        args.pair,
    )
    print(f"{c:.12g}")
    return EXIT_OK


def _read_config(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line is not key=value: {line!r}")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()
    return values


def _float_list(text: str) -> tuple[float, ...]:
    return tuple(float(x) for x in text.split(",") if x.strip())


def _sweep_config(args) -> SweepConfig:
    cfg = _read_config(args.config) if args.config else {}

    j_sign = args.j if args.j is not None else int(cfg.get("j", 1))
    pair = args.pair if args.pair is not None else int(cfg.get("pair", 12))

    if args.b is not None:
        b_values = tuple(args.b)
    elif args.b_range:
        b_values = parse_range(args.b_range)
    elif "b" in cfg:
        b_values = _float_list(cfg["b"])
    elif "b-range" in cfg:
        b_values = parse_range(cfg["b-range"])
    else:
        b_values = ()

    if args.tau is not None:
        tau_values = tuple(args.tau)
    elif args.tau_range:
        tau_values = parse_range(args.tau_range)
    elif "tau" in cfg:
        tau_values = _float_list(cfg["tau"])
    elif "tau-range" in cfg:
        tau_values = parse_range(cfg["tau-range"])
    else:
        tau_values = ()

    out = args.out if args.out else cfg.get("out", "sweep.csv")
    return SweepConfig(pair=pair, j_sign=j_sign, b_values=b_values,
                       tau_values=tau_values, out_path=out)


def _cmd_sweep(args) -> int:
    config = _sweep_config(args)
    cfg = _read_config(args.config) if args.config else {}
    threads = args.threads if args.threads is not None else int(cfg.get("threads", 1))
    rows = sweep_rows(config, threads=max(1, threads))
    try:
        write_csv(rows, config.out_path)
    except OSError as exc:
        print(f"error: cannot write {config.out_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows to {config.out_path}")
    return EXIT_OK


def _cmd_figure(args) -> int:
    preset = figure_preset(args.id)
    out = args.out if args.out else f"fig{preset.figure_id}.csv"
    rows = figure_rows(preset.figure_id, threads=args.threads)
    try:
        write_csv(rows, out)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows)} rows ({len(preset.series)} series) to {out}")
    return EXIT_OK


def _limit_rows() -> list[tuple[str, float, float, float]]:
    """(label, computed, expected, tolerance) for every tabulated limit."""

    def c_of(j: int, b: float, tau: float, pair: int) -> float:
        return concurrence_pair(ModelParams(j=float(j), b=b),
                                ThermalParams(tau=tau, j_sign=j), pair)

    rows = []
    rows.append(("C12, J>0, B=10, tau=0.01   -> 1 (tau->0)",
                 c_of(1, 10.0, 0.01, 12), 1.0, 1e-3))
    rows.append(("C12, J<0, B=1,  tau=0.005  -> 2/(2+a4^2)",
                 c_of(-1, 1.0, 0.005, 12), c12_zero_t_limit(ModelParams(j=-1.0, b=1.0)), 1e-3))
    rows.append(("C12, J<0, B=100, tau=0.01  -> 1 (B->inf)",
                 c_of(-1, 100.0, 0.01, 12), 1.0, 1e-3))
    rows.append(("C12, J<0, B=0.005, tau=5e-5 -> 2/3 (B->0+)",
                 c_of(-1, 0.005, 5e-5, 12), 2.0 / 3.0, 1e-2))

    c_b0 = {j: c_of(j, 0.0, 0.01, 12) for j in (1, -1)}
    entangled_sign = max(c_b0, key=c_b0.get)
    rows.append((f"C12, B=0 (entangled sign J{'>' if entangled_sign > 0 else '<'}0), tau=0.01 -> 1/3",
                 c_b0[entangled_sign], 1.0 / 3.0, 1e-3))
    rows.append((f"C12, B=0 (opposite sign J{'>' if entangled_sign < 0 else '<'}0), tau=0.01 -> 0",
                 c_b0[-entangled_sign], 0.0, 0.0))

    c13_max = max(c_of(-1, float(b), 0.002, 13) for b in np.linspace(0.01, 0.2, 200))
    rows.append(("C13 max, J<0, tau=0.002, B in [0.01,0.2] -> 2/3",
                 c13_max, 2.0 / 3.0, 1e-2))
    rows.append(("C13 approx vs exact, J<0, B=0.05, tau=0.002",
                 c13_low_t_approx(0.05, 0.002), c_of(-1, 0.05, 0.002, 13), 5e-2))

    tau_star = oracle.threshold_scan(ModelParams(j=float(entangled_sign), b=0.0), 12)
    rows.append(("tau* at B=0 (pair 12, entangled sign)   -> 1.2707",
                 tau_star, 1.2707, 2e-3))
    return rows


def _cmd_limits(_args) -> int:
    rows = _limit_rows()
    all_pass = True
    for label, computed, expected, tol in rows:
        dev = abs(computed - expected)
        ok = dev <= tol
        all_pass &= ok
        print(f"{'PASS' if ok else 'FAIL'}  {label:55s} computed={computed:.10g} "
              f"expected={expected:.10g} |dev|={dev:.2e} tol={tol:g}")
    print("limits:", "all PASS" if all_pass else "FAILURES present")
    return EXIT_OK if all_pass else EXIT_CHECK_FAILED


def _verify_grids(args) -> tuple[tuple[float, ...], tuple[float, ...]]:
    custom = any(v is not None for v in (args.tau_min, args.tau_max, args.b_min, args.b_max))
    if not custom:
        return oracle.DEFAULT_TAU_GRID, oracle.DEFAULT_B_GRID
    tau_min = args.tau_min if args.tau_min is not None else oracle.DEFAULT_TAU_GRID[0]
    tau_max = args.tau_max if args.tau_max is not None else oracle.DEFAULT_TAU_GRID[-1]
    b_min = args.b_min if args.b_min is not None else oracle.DEFAULT_B_GRID[0]
    b_max = args.b_max if args.b_max is not None else oracle.DEFAULT_B_GRID[-1]
    taus = tuple(float(t) for t in np.linspace(tau_min, tau_max, args.tau_count))
    bs = tuple(float(b) for b in np.linspace(b_min, b_max, args.b_count))
    return taus, bs


def _cmd_verify(args) -> int:
    taus, bs = _verify_grids(args)
    try:
        report = oracle.cross_check(tau_values=taus, b_values=bs)
    except ToleranceExceeded as exc:
        print(exc.report.summary() if exc.report else str(exc))
        return EXIT_CHECK_FAILED
    print(report.summary())
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "eval": _cmd_eval,
        "sweep": _cmd_sweep,
        "figure": _cmd_figure,
        "limits": _cmd_limits,
        "verify": _cmd_verify,
    }[args.command]
    try:
        return handler(args)
    except (XXRingError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
