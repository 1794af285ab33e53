"""Command-line harness.

Subcommands:
  sweep      negativity over an (r, q_R, ordering) grid, written as CSV
  check      run every registered invariant and report pass/fail lines
  orderings  rank operator orderings by q_R sensitivity at r = pi/4
  single     one parameter point, reduced state and negativity as JSON

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 output I/O error.
Flags override values from a --config file (key=value lines), which in turn
override the built-in defaults; `unruhsim --show-defaults` prints those
defaults in config-file form.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .checks import run_all
from .entanglement import (OperatorOrdering, classify_orderings,
                           infinite_acceleration_reduced_state, negativity,
                           partial_transpose, qubit_reduced_state,
                           subalgebra_reduced_state)
from .sweep import SweepConfig, gnuplot_script, render_csv, sweep_records
from .unruh import QR_GRID, R_MAX, StateFamily, UnruhParams, build_state

DEFAULTS = {
    "r_points": "50",
    "qr": ",".join(repr(q) for q in QR_GRID),
    "ordering": "physical,legacy-interleaved",
    "family": "{0!r},{0!r},1,0,0,1".format(math.sqrt(0.5)).replace(" ", ""),
    "r": "pi/4",
    "out": "-",
}


class UsageError(ValueError):
    pass


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r} (use forms like 0.5, 1+2j)")


def _parse_family(text: str) -> StateFamily:
    parts = text.split(",")
    if len(parts) != 6:
        raise UsageError(f"--family needs 6 comma-separated values P,Q,a1,a2,b1,b2, got {len(parts)}")
    try:
        return StateFamily(*(_parse_complex(p) for p in parts))
    except ValueError as exc:
        raise UsageError(str(exc))


def _parse_r(text: str) -> float:
    token = text.strip().lower().replace(" ", "")
    if token.startswith("pi/"):
        try:
            return math.pi / float(token[3:])
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"cannot parse r value {text!r}")
    try:
        return float(token)
    except ValueError:
        raise UsageError(f"cannot parse r value {text!r} (use a float or pi/N)")


def _parse_qr_list(text: str) -> list:
    return [float(part) for part in text.split(",") if part.strip()]


def _read_config(path: str) -> dict:
    values = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in DEFAULTS:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r} "
                                     f"(known: {', '.join(sorted(DEFAULTS))})")
                values[key] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}")
    return values


def _resolve(args, key: str, flag_value):
    """Precedence: explicit flag, then config file, then built-in default."""
    if flag_value is not None:
        return flag_value, True
    config = getattr(args, "_config_values", {})
    if key in config:
        return config[key], False
    return DEFAULTS[key], False


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _family_json(family: StateFamily) -> dict:
    return {name: [getattr(family, name).real, getattr(family, name).imag]
            for name in ("P", "Q", "a1", "a2", "b1", "b2")}


def _load_common(args):
    args._config_values = _read_config(args.config) if args.config else {}

    text, _ = _resolve(args, "family", args.family)
    family = _parse_family(text) if isinstance(text, str) else text

    qr_value, from_flag = _resolve(args, "qr", args.qr or None)
    if from_flag:
        qr_list = [float(q) for q in qr_value]
    else:
        qr_list = _parse_qr_list(qr_value)
    if not qr_list:
        raise UsageError("at least one q_R value is required")
    for q in qr_list:
        if not 0.0 <= q <= 1.0:
            raise UsageError(f"q_R must lie in [0, 1], got {q!r}")
    return family, qr_list


def cmd_sweep(args) -> int:
    family, qr_list = _load_common(args)
    r_points_raw, _ = _resolve(args, "r_points", args.r_points)
    try:
        r_points = int(r_points_raw)
    except ValueError:
        raise UsageError(f"--r-points must be an integer, got {r_points_raw!r}")
    ordering_value, from_flag = _resolve(args, "ordering", args.ordering or None)
    labels = ordering_value if from_flag else [s for s in ordering_value.split(",") if s.strip()]
    try:
        orderings = tuple(OperatorOrdering.parse(label).label for label in labels)
        config = SweepConfig(r_points=r_points, q_r_values=tuple(qr_list),
                             orderings=orderings, family=family)
    except ValueError as exc:
        raise UsageError(str(exc))
    out, _ = _resolve(args, "out", args.out)
    records = sweep_records(config)
    _write_text(out, render_csv(records))
    if args.gnuplot:
        if out in (None, "-"):
            raise UsageError("--gnuplot needs --out so the script can name the CSV file")
        _write_text(args.gnuplot, gnuplot_script(out, config))
    return 0


def cmd_check(args) -> int:
    results = run_all()
    for result in results:
        print(result.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results)} checks: {len(results) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


def cmd_orderings(args) -> int:
    family, qr_list = _load_common(args)
    results = classify_orderings(family, tuple(qr_list),
                                 all_permutations=args.all_permutations)
    out, _ = _resolve(args, "out", args.out)
    if args.json:
        payload = {
            "r": R_MAX,
            "q_R": qr_list,
            "family": _family_json(family),
            "orderings": [{
                "permutation": "".join(str(m) for m in item.ordering.permutation),
                "modes": item.ordering.mode_names(),
                "name": item.ordering.name,
                "spread": item.spread,
                "convergent": item.convergent,
            } for item in results],
        }
        _write_text(out, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = [f"{'permutation':<12} {'modes':<22} {'name':<20} {'spread':>18} convergent"]
    for item in results:
        perm = "".join(str(m) for m in item.ordering.permutation)
        lines.append(f"{perm:<12} {item.ordering.mode_names():<22} "
                     f"{item.ordering.name or '-':<20} {item.spread:>18.12g} "
                     f"{'yes' if item.convergent else 'no'}")
    _write_text(out, "\n".join(lines) + "\n")
    return 0


def cmd_single(args) -> int:
    family, qr_list = _load_common(args)
    if len(qr_list) != 1:
        raise UsageError("single takes exactly one --qr value")
    r_raw, from_flag = _resolve(args, "r", args.r)
    r = r_raw if from_flag else _parse_r(r_raw)
    ordering_value, from_flag = _resolve(args, "ordering", args.ordering or None)
    if from_flag and len(ordering_value) != 1:
        raise UsageError("single takes exactly one --ordering")
    label = ordering_value[0] if from_flag else ordering_value.split(",")[0]
    try:
        ordering = OperatorOrdering.parse(label)
        params = UnruhParams.from_qr(r, qr_list[0])
    except ValueError as exc:
        raise UsageError(str(exc))

    psi = build_state(family, params)
    rho = qubit_reduced_state(psi, ordering)
    spectrum = np.linalg.eigvalsh(partial_transpose(rho.matrix, 0, (2, 4)))
    negativities = {
        "qubit_trace": negativity(rho),
        "subalgebra": negativity(subalgebra_reduced_state(psi)),
    }
    if abs(params.r - R_MAX) <= 1e-12:
        negativities["infinite_acceleration"] = negativity(
            infinite_acceleration_reduced_state(family, params))
    payload = {
        "r": params.r,
        "q_R": qr_list[0],
        "ordering": ordering.label,
        "family": _family_json(family),
        "reduced_density_matrix": {
            "dims": list(rho.dims),
            "entries": [[value.real, value.imag] for value in rho.matrix.reshape(-1)],
        },
        "partial_transpose_spectrum": [float(x) for x in spectrum],
        "negativity": negativities,
    }
    out, _ = _resolve(args, "out", args.out)
    _write_text(out, json.dumps(payload, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruhsim",
        description="Exact five-mode negativity harness for the Alice + two-wedge setting.",
        allow_abbrev=False)
    parser.add_argument("--show-defaults", action="store_true",
                        help="print the built-in defaults in config-file form and exit")
    sub = parser.add_subparsers(dest="command")

    def add_common(p, with_ordering=True):
        p.add_argument("--qr", action="append", type=float, metavar="Q",
                       help="q_R value in [0, 1]; repeat for several")
        if with_ordering:
            p.add_argument("--ordering", action="append", metavar="ORD",
                           help="preset name or digit permutation like 01234; repeatable")
        p.add_argument("--family", metavar="P,Q,a1,a2,b1,b2",
                       help="six complex weights, e.g. 0.6,0.8,1,0,0,1")
        p.add_argument("--out", metavar="PATH", help="output file ('-' for stdout)")
        p.add_argument("--config", metavar="PATH", help="key=value config file")

    p_sweep = sub.add_parser("sweep", help="negativity CSV over an (r, q_R, ordering) grid",
                             allow_abbrev=False)
    p_sweep.add_argument("--r-points", type=int, metavar="N",
                         help="number of uniform r points on [0, pi/4]")
    add_common(p_sweep)
    p_sweep.add_argument("--gnuplot", metavar="PATH",
                         help="also write a gnuplot script plotting the CSV (needs --out)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_check = sub.add_parser("check", help="run every invariant check",
                             allow_abbrev=False)
    p_check.set_defaults(func=cmd_check)

    p_ord = sub.add_parser("orderings", help="rank orderings by q_R spread at r = pi/4",
                           allow_abbrev=False)
    add_common(p_ord, with_ordering=False)
    p_ord.add_argument("--json", action="store_true", help="emit JSON instead of a table")
    p_ord.add_argument("--all-permutations", action="store_true",
                       help="score all 120 permutations instead of fixing Alice first")
    p_ord.set_defaults(func=cmd_orderings)

    p_single = sub.add_parser("single", help="one parameter point as JSON",
                              allow_abbrev=False)
    p_single.add_argument("--r", type=_parse_r, metavar="R",
                          help="acceleration angle in [0, pi/4]; accepts pi/4, pi/8")
    add_common(p_single)
    p_single.set_defaults(func=cmd_single)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.show_defaults:
        for key, value in DEFAULTS.items():
            print(f"{key}={value}")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        print("unruhsim: a subcommand is required", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"unruhsim {args.command}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"unruhsim {args.command}: cannot write output: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
