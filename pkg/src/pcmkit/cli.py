"""Command-line front end.

Four subcommands: ``compute`` evaluates indices on one matrix, ``axioms``
runs the empirical property suite, ``curve`` samples an index along a
one-parameter family, and ``search`` hunts for a counterexample to one
property. Exit codes: 0 success, 1 usage or configuration error, 2 input
parse or validation error, 3 unexpected internal error.

Row/column flags (--p, --q) are 1-based, matching matrix files; the
library API underneath is 0-based.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from pathlib import Path

import numpy as np

from . import __version__
from .errors import (
    ConfigError,
    DiagonalEntryError,
    InconsistentBaseError,
    MatrixParseError,
    NonPositiveEntryError,
    NonSquareError,
    OrderMismatchError,
    OrderTooSmallError,
    ReciprocityViolationError,
    UnitEntryError,
    ZeroDenominatorError,
)
from .harness import (
    CHECKERS,
    DEFAULT_DELTA_GRID,
    DEFAULT_ORDERS,
    DEFAULT_SEED,
    PROPERTIES,
    SuiteConfig,
    VerdictStatus,
    curve_intensification,
    curve_perturbation,
    run_suite,
)
from .generators import derive_seed
from .indices import IndexId, descriptor
from .matrixfile import load_matrix
from .plotting import save_curve_figure, save_verdict_figure
from .report import dumps_doc, render_table, report_to_doc, write_doc

_VALIDATION_ERRORS = (
    MatrixParseError,
    NonSquareError,
    OrderTooSmallError,
    NonPositiveEntryError,
    ReciprocityViolationError,
    OrderMismatchError,
    DiagonalEntryError,
    UnitEntryError,
    InconsistentBaseError,
    ZeroDenominatorError,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to this tool's 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def format_value(v: float, digits: int = 9) -> str:
    """Fixed number of significant digits, trailing zeros kept."""
    if digits < 1:
        raise ConfigError("--digits must be positive")
    return f"{v:#.{digits}g}"


def _parse_indices(text: str | None) -> tuple:
    if text is None:
        return tuple(IndexId)
    out = []
    for tok in text.split(","):
        t = tok.strip()
        if not t:
            continue
        key = t.upper().replace("*", "_STAR")
        try:
            idx = IndexId(key)
        except ValueError:
            known = ", ".join(i.value for i in IndexId)
            raise ConfigError(f"unknown index {t!r}; known: {known}") from None
        if idx not in out:
            out.append(idx)
    if not out:
        raise ConfigError("no index named")
    return tuple(out)


def _single_index(text: str) -> IndexId:
    ids = _parse_indices(text)
    if len(ids) != 1:
        raise ConfigError("this command takes exactly one index")
    return ids[0]


def _parse_orders(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ConfigError(f"bad orders list {text!r}; expected integers "
                          f"like 3,4,5") from None


def _parse_floats(text: str, what: str) -> tuple:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ConfigError(f"bad {what} {text!r}; expected numbers like "
                          f"0.5,0.8,1.2") from None


def _linspace_grid(lo: float, hi: float, steps: int) -> tuple:
    if steps < 2:
        raise ConfigError("grid needs at least 2 steps")
    if not hi > lo:
        raise ConfigError(f"grid upper bound {hi} must exceed lower "
                          f"bound {lo}")
    return tuple(float(x) for x in np.linspace(lo, hi, steps))


def _plot_path(args) -> str | None:
    if args.plot is None:
        return None
    if args.plot:
        return args.plot
    if not getattr(args, "out", None):
        raise ConfigError("--plot with no path needs --out to derive "
                          "one from")
    return str(Path(args.out).with_suffix(".png"))


def _suite_config(args) -> SuiteConfig:
    delta = (_parse_floats(args.delta_grid, "delta grid")
             if args.delta_grid else DEFAULT_DELTA_GRID)
    return SuiteConfig(seed=args.seed,
                       trials_per_check=args.trials,
                       orders=_parse_orders(args.orders),
                       b_grid=_linspace_grid(args.b_min, args.b_max,
                                             args.b_steps),
                       delta_grid=delta)


def cmd_compute(args) -> int:
    m = load_matrix(args.matrix)
    for idx in _parse_indices(args.index):
        desc = descriptor(idx)
        try:
            shown = format_value(desc.fn(m), args.digits)
        except ZeroDenominatorError:
            shown = "undefined"
        print(f"{idx.value} {shown} nu={desc.nu:g} {desc.orientation.value}")
    return 0


def cmd_axioms(args) -> int:
    ids = _parse_indices(args.index)
    report = run_suite(ids, _suite_config(args))
    doc = report_to_doc(report)
    if args.out:
        write_doc(doc, args.out)
    if args.format == "doc":
        sys.stdout.write(dumps_doc(doc))
    else:
        sys.stdout.write(render_table(report))
    plot = _plot_path(args)
    if plot:
        save_verdict_figure(report, plot)
    return 0


def cmd_curve(args) -> int:
    idx = _single_index(args.index)
    m = load_matrix(args.matrix)
    if args.mode == "b":
        grid = _linspace_grid(args.b_min, args.b_max, args.b_steps)
        series = curve_intensification(idx, m, grid)
    else:
        if args.p is None or args.q is None:
            raise ConfigError("delta mode needs --p and --q")
        if args.p < 1 or args.q < 1:
            raise ConfigError("--p and --q are 1-based positions")
        if args.delta_grid:
            grid = _parse_floats(args.delta_grid, "delta grid")
        else:
            grid = tuple(sorted(set(DEFAULT_DELTA_GRID) | {1.0}))
        series = curve_perturbation(idx, m, args.p - 1, args.q - 1, grid)
    csv = "param,value\n" + "".join(f"{x:.17g},{y:.17g}\n"
                                    for x, y in series.samples)
    if args.out:
        Path(args.out).write_text(csv, encoding="utf-8")
    else:
        sys.stdout.write(csv)
    plot = _plot_path(args)
    if plot:
        save_curve_figure(series, plot)
    return 0


def _print_witness(idx: IndexId, prop: str, verdict) -> None:
    w = verdict.witness
    print(f"# index: {idx.value}")
    print(f"# property: {prop}")
    print(f"# status: {verdict.status.value}")
    print(f"# trials: {verdict.trials}")
    print(f"# params: {json.dumps(w.params, sort_keys=True)}")
    print(f"# observed: {json.dumps(w.observed, sort_keys=True)}")
    if w.note:
        print(f"# note: {w.note}")
    for row in w.matrix:
        print(" ".join(f"{x:.17g}" for x in row))


def cmd_search(args) -> int:
    idx = _single_index(args.index)
    prop = args.property.upper()
    if args.trials < 1:
        raise ConfigError("--trials must be positive")
    base = _suite_config(args)
    spent = 0
    round_i = 0
    status = None
    while spent < args.trials:
        budget = min(250 * 4 ** round_i, args.trials - spent)
        cfg = SuiteConfig(seed=derive_seed(args.seed, "search", round_i),
                          trials_per_check=budget,
                          orders=base.orders,
                          b_grid=base.b_grid,
                          delta_grid=base.delta_grid)
        verdict = CHECKERS[prop](idx, cfg)
        spent += verdict.trials
        status = verdict.status
        if verdict.status is VerdictStatus.VIOLATION_FOUND:
            _print_witness(idx, prop, verdict)
            return 0
        round_i += 1
    print(f"# no violation found for {idx.value} {prop} after {spent} "
          f"trials (last status: {status.value})")
    return 0


def _add_suite_flags(sp) -> None:
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help="base seed for all random draws")
    sp.add_argument("--trials", type=int, default=1000,
                    help="random trials per property check")
    sp.add_argument("--orders", default=",".join(map(str, DEFAULT_ORDERS)),
                    metavar="LIST", help="matrix orders, e.g. 3,4,5")
    sp.add_argument("--b-min", type=float, default=1.0)
    sp.add_argument("--b-max", type=float, default=5.0)
    sp.add_argument("--b-steps", type=int, default=41)
    sp.add_argument("--delta-grid", metavar="LIST",
                    help="perturbation exponents, e.g. 0.2,0.5,2,3")


def build_parser() -> _Parser:
    parser = _Parser(prog="pcmkit",
                     description="Inconsistency indices for pairwise "
                                 "comparison matrices and empirical checks "
                                 "of their properties.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    sp = sub.add_parser("compute", help="evaluate indices on one matrix")
    sp.add_argument("--matrix", required=True, metavar="PATH")
    sp.add_argument("--index", metavar="LIST",
                    help="comma-separated index tokens (default: all)")
    sp.add_argument("--digits", type=int, default=9,
                    help="significant digits to print (default: 9)")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("axioms", help="run the property-check suite")
    sp.add_argument("--index", metavar="LIST",
                    help="comma-separated index tokens (default: all)")
    _add_suite_flags(sp)
    sp.add_argument("--out", metavar="PATH",
                    help="write the JSON report document here")
    sp.add_argument("--format", choices=("table", "doc"), default="table",
                    help="stdout rendering (default: table)")
    sp.add_argument("--plot", nargs="?", const="", metavar="PATH",
                    help="render the verdict grid to PNG (default path "
                         "derives from --out)")
    sp.set_defaults(func=cmd_axioms)

    sp = sub.add_parser("curve", help="sample one index along a sweep")
    sp.add_argument("--matrix", required=True, metavar="PATH")
    sp.add_argument("--index", required=True, metavar="ID")
    sp.add_argument("--mode", choices=("b", "delta"), default="b",
                    help="sweep uniform intensification (b) or one entry "
                         "(delta)")
    sp.add_argument("--b-min", type=float, default=1.0)
    sp.add_argument("--b-max", type=float, default=5.0)
    sp.add_argument("--b-steps", type=int, default=41)
    sp.add_argument("--delta-grid", metavar="LIST")
    sp.add_argument("--p", type=int, metavar="ROW",
                    help="1-based row of the swept entry (delta mode)")
    sp.add_argument("--q", type=int, metavar="COL",
                    help="1-based column of the swept entry (delta mode)")
    sp.add_argument("--out", metavar="PATH", help="write CSV here instead "
                                                  "of stdout")
    sp.add_argument("--plot", nargs="?", const="", metavar="PATH",
                    help="render the curve to PNG (default path derives "
                         "from --out)")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("search", help="hunt for a property counterexample")
    sp.add_argument("--index", required=True, metavar="ID")
    sp.add_argument("--property", required=True,
                    choices=PROPERTIES, type=str.upper)
    _add_suite_flags(sp)
    sp.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _VALIDATION_ERRORS as exc:
        print(f"pcmkit: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"pcmkit: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pcmkit: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 3
