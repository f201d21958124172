"""Command-line entry point: ``matfront run | exact | compare``."""
from __future__ import annotations

import argparse
import csv
import os
import sys

from .driver import SchemeKind, SimulationConfig, preset, run, write_exact_csv, write_outputs
from .errors import SolverError

# config-file key -> SimulationConfig field
_KEYS = {
    "test": "test",
    "scheme": "scheme",
    "flux": "flux",
    "dx": "dx",
    "cfl": "cfl",
    "eps": "eps",
    "tend": "t_end",
    "left": "left",
    "right": "right",
    "gamma1": "gamma1",
    "gamma2": "gamma2",
    "cv1": "cv1",
    "cv2": "cv2",
    "x_disc": "x_disc",
    "x_min": "x_min",
    "x_max": "x_max",
    "boundary": "boundary",
    "out_dir": "out_dir",
}
_FLOATS = {"dx", "cfl", "eps", "t_end", "gamma1", "gamma2", "cv1", "cv2", "x_disc", "x_min", "x_max"}


def read_config_file(path):
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in _KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[_KEYS[key]] = value
    return values


def _parse_state(text):
    parts = [float(v) for v in text.replace(",", " ").split()]
    if len(parts) != 4:
        raise ValueError(f"a state needs four numbers (rho, rho*u, p, Y), got {text!r}")
    return tuple(parts)


def _add_common(p):
    p.add_argument("--config", help="flat key = value file; flags override it")
    p.add_argument("--test", choices=["A", "B"], default=None)
    p.add_argument("--custom", action="store_true",
                   help="use --left/--right and gas parameters instead of a preset")
    p.add_argument("--left", help="left primitive state 'rho,rho*u,p,Y'")
    p.add_argument("--right", help="right primitive state 'rho,rho*u,p,Y'")
    p.add_argument("--gamma1", type=float)
    p.add_argument("--gamma2", type=float)
    p.add_argument("--cv1", type=float)
    p.add_argument("--cv2", type=float)
    p.add_argument("--x-disc", dest="x_disc", type=float)
    p.add_argument("--flux", choices=["rusanov", "hll", "hllc"])
    p.add_argument("--dx", type=float)
    p.add_argument("--cfl", type=float)
    p.add_argument("--eps", type=float)
    p.add_argument("--tend", dest="t_end", type=float)
    p.add_argument("--boundary", choices=["transmissive", "periodic"])
    p.add_argument("--out-dir", dest="out_dir")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="matfront",
        description="Two-species shock-tube solver comparing Two-Flux and Lagrange-Projection schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run one scheme and write profile/conservation CSVs")
    _add_common(p_run)
    p_run.add_argument("--scheme", choices=[s.value for s in SchemeKind])
    p_exact = sub.add_parser("exact", help="write the exact solution on the run grid")
    _add_common(p_exact)
    p_cmp = sub.add_parser("compare", help="run all five schemes and write a summary report")
    _add_common(p_cmp)
    return parser


def config_from_args(args):
    """Merge preset, config file and flags (in increasing priority)."""
    values = read_config_file(args.config) if args.config else {}
    for key in _KEYS.values():
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    out_dir = values.pop("out_dir", "out")
    test = values.pop("test", None)
    for key in ("left", "right"):
        if isinstance(values.get(key), str):
            values[key] = _parse_state(values[key])
    for key in _FLOATS & values.keys():
        values[key] = float(values[key])
    if args.custom:
        if "left" not in values or "right" not in values:
            raise ValueError("--custom needs --left and --right")
        config = SimulationConfig(**values)
    else:
        config = preset(test or "A", **values)
    return config, out_dir


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config, out_dir = config_from_args(args)
        if args.command == "run":
            result = run(config)
            write_outputs(result, out_dir)
            print(f"{config.scheme.value}: {result.steps} steps to t={result.time!r} -> {out_dir}")
        elif args.command == "exact":
            os.makedirs(out_dir, exist_ok=True)
            write_exact_csv(config, os.path.join(out_dir, "exact.csv"))
        else:
            compare(config, out_dir)
    except (SolverError, ValueError, OSError) as exc:
        print(f"matfront: error: {exc}", file=sys.stderr)
        return 1
    return 0


def compare(config, out_dir):
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    for scheme in SchemeKind:
        result = run(config.replace(scheme=scheme))
        write_outputs(result, os.path.join(out_dir, scheme.value))
        l1 = result.l1 if result.l1 is not None else [float("nan")] * 4
        rows.append([scheme.value, result.steps, *l1, *result.ledger.peak()])
    path = os.path.join(out_dir, "compare.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["scheme", "steps", "l1_rho", "l1_u", "l1_p", "l1_Y",
                         "peak_err_rho", "peak_err_mom", "peak_err_etot", "peak_err_rho_y"])
        for row in rows:
            writer.writerow([f"{v:.6e}" if isinstance(v, float) else v for v in map(_plain, row)])
    for row in rows:
        print(f"{row[0]:>11}  L1(rho)={row[2]:.4e}  peak rhoE error={row[8]:.3e}")


def _plain(v):
    return float(v) if hasattr(v, "dtype") else v


if __name__ == "__main__":
    sys.exit(main())
