"""Command-line front end: eval | monodromy | verify | grid.

Numbers in JSON and CSV output are printed with 17 significant digits so a
binary64 value round-trips exactly; identical flags (and seed) produce
byte-identical output.  LERCH_THREADS caps grid parallelism.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .continuation import evaluate_on_cover
from .domain import Point3
from .errors import LerchError
from .monodromy import monodromy_power
from .suites import SUITE_NAMES, run_suite
from .words import BranchState, Generator, Word, abelianize, parse_branch

_CSV_HEADER = "coord_re,coord_im,z_re,z_im,abs_err,method"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _to_json(obj) -> str:
    if isinstance(obj, dict):
        items = ", ".join(f'"{k}": {_to_json(v)}' for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"expected 're' or 're,im', got {text!r}")


def _range_arg(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 'lo,hi,steps', got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise argparse.ArgumentTypeError("steps must be >= 1")
    return lo, hi, steps


def _complex_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _branch_json(b: BranchState) -> dict:
    return {
        "kx": {str(n): k for n, k in b.kx},
        "ky": {str(n): k for n, k in b.ky},
    }


def _error_exit(exc: Exception) -> int:
    sys.stderr.write(_to_json({"error": type(exc).__name__, "message": str(exc)}) + "\n")
    return 2


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        branch = parse_branch(args.branch) if args.branch else BranchState.zero()
        point = Point3(args.s, args.a, args.c)
        lv = evaluate_on_cover(point, branch, args.tol)
    except LerchError as exc:
        return _error_exit(exc)
    record = {
        "value": _complex_json(lv.value),
        "method": lv.method.value,
        "abs_err": lv.abs_err_estimate,
        "branch": _branch_json(branch),
    }
    print(_to_json(record))
    return 0


def cmd_monodromy(args: argparse.Namespace) -> int:
    try:
        word = Word.parse(args.word)
        branch = abelianize(word)
        contributions = []
        total = 0j
        for axis, items in (("X", branch.kx), ("Y", branch.ky)):
            for n, k in items:
                value = monodromy_power(Generator(axis, n), k, args.s, args.a, args.c)
                total += value
                contributions.append(
                    {"generator": f"{axis}{n}", "winding": k, "value": _complex_json(value)}
                )
    except LerchError as exc:
        return _error_exit(exc)
    record = {
        "value": _complex_json(total),
        "abelianization": _branch_json(branch),
        "contributions": contributions,
    }
    print(_to_json(record))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.samples, args.seed)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


def _grid_points(rng: tuple[float, float, int]) -> list[float]:
    lo, hi, steps = rng
    if steps == 1:
        return [lo]
    h = (hi - lo) / (steps - 1)
    return [lo + i * h for i in range(steps)]


def cmd_grid(args: argparse.Namespace) -> int:
    axis = args.axis.lower()
    fixed = {"s": args.fixed_s, "a": args.fixed_a, "c": args.fixed_c}
    needed = [k for k in ("s", "a", "c") if k != axis]
    missing = [k for k in needed if fixed[k] is None]
    if missing:
        sys.stderr.write(
            _to_json({"error": "UsageError", "message": f"missing --fixed-{'/'.join(missing)}"}) + "\n"
        )
        return 2
    try:
        branch = parse_branch(args.branch) if args.branch else BranchState.zero()
    except LerchError as exc:
        return _error_exit(exc)

    coords = [
        complex(re, im) for re in _grid_points(args.re) for im in _grid_points(args.im)
    ]

    def one(coord: complex) -> tuple[complex, tuple | None]:
        triple = dict(fixed)
        triple[axis] = coord
        try:
            point = Point3(triple["s"], triple["a"], triple["c"])
            lv = evaluate_on_cover(point, branch, args.tol)
        except LerchError:
            return coord, None
        return coord, (lv.value, lv.abs_err_estimate, lv.method.value)

    threads = max(1, int(os.environ.get("LERCH_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(one, coords))
    else:
        rows = [one(coord) for coord in coords]

    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            if args.format == "csv":
                fh.write(_CSV_HEADER + "\n")
                for coord, payload in rows:
                    if payload is None:
                        fh.write(f"{_fmt(coord.real)},{_fmt(coord.imag)},,,,skipped\n")
                    else:
                        value, err, method = payload
                        fh.write(
                            f"{_fmt(coord.real)},{_fmt(coord.imag)},{_fmt(value.real)},"
                            f"{_fmt(value.imag)},{_fmt(err)},{method}\n"
                        )
            else:
                records = []
                for coord, payload in rows:
                    if payload is None:
                        records.append({"coord": _complex_json(coord), "method": "skipped"})
                    else:
                        value, err, method = payload
                        records.append(
                            {
                                "coord": _complex_json(coord),
                                "z": _complex_json(value),
                                "abs_err": err,
                                "method": method,
                            }
                        )
                fh.write(_to_json(records) + "\n")
    except OSError as exc:
        return _error_exit(exc)
    return 0


# lets bare negative values like "-1,0" or "-0.5" pass as arguments
_NEGATIVE_VALUE = re.compile(r"^-\d+(\.\d*)?(e[-+]?\d+)?(,-?\d+(\.\d*)?(e[-+]?\d+)?)*$", re.IGNORECASE)


def _allow_negative_values(parser: argparse.ArgumentParser) -> argparse.ArgumentParser:
    parser._negative_number_matcher = _NEGATIVE_VALUE
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = _allow_negative_values(argparse.ArgumentParser(prog="lerchz", description=__doc__))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=lambda **kw: _allow_negative_values(argparse.ArgumentParser(**kw)))

    p_eval = sub.add_parser("eval", help="evaluate on the cover at one point")
    p_eval.add_argument("--s", type=_complex_arg, required=True, help="s as re,im")
    p_eval.add_argument("--a", type=_complex_arg, required=True, help="a as re,im")
    p_eval.add_argument("--c", type=_complex_arg, required=True, help="c as re,im")
    p_eval.add_argument("--branch", default="", help="loop word or kx[n]=v / ky[n]=v assignments")
    p_eval.add_argument("--tol", type=float, default=1e-10)
    p_eval.set_defaults(func=cmd_eval)

    p_mono = sub.add_parser("monodromy", help="monodromy of a loop word")
    p_mono.add_argument("--word", required=True, help="e.g. 'X0 Y-2^-1 X0^3'")
    p_mono.add_argument("--s", type=_complex_arg, required=True)
    p_mono.add_argument("--a", type=_complex_arg, required=True)
    p_mono.add_argument("--c", type=_complex_arg, required=True)
    p_mono.set_defaults(func=cmd_monodromy)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p_verify.add_argument("--samples", type=int, default=10)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=cmd_verify)

    p_grid = sub.add_parser("grid", help="evaluate over a grid and export rows")
    p_grid.add_argument("--axis", choices=("s", "a", "c", "S", "A", "C"), required=True)
    p_grid.add_argument("--re", type=_range_arg, required=True, help="lo,hi,steps")
    p_grid.add_argument("--im", type=_range_arg, default=(0.0, 0.0, 1), help="lo,hi,steps")
    p_grid.add_argument("--fixed-s", type=_complex_arg, default=None)
    p_grid.add_argument("--fixed-a", type=_complex_arg, default=None)
    p_grid.add_argument("--fixed-c", type=_complex_arg, default=None)
    p_grid.add_argument("--branch", default="")
    p_grid.add_argument("--tol", type=float, default=1e-10)
    p_grid.add_argument("--format", choices=("csv", "json"), default="csv")
    p_grid.add_argument("--out", required=True)
    p_grid.set_defaults(func=cmd_grid)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())
