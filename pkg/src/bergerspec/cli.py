"""Command-line interface: spectra, index profiles, and figure data.

Subcommands
    sphere     exact round p-sphere spectrum
    berger     Berger sphere spectrum at a squash parameter t or epsilon
    piecewise  exact branch partition of a distinct-eigenvalue curve
    index      Jacobi index/nullity for the cp2 and page families
    plotdata   dense tables behind the three standard figures

Output is CSV (default) or JSON.  Exact quantities (branch coefficients,
breakpoints) are serialized as integer or "p/q" fraction strings; real
columns honor --precision (default 12 digits, overridable through the
BERGERSPEC_PRECISION environment variable).  CSV comment lines start
with '#'.  Exit status: 0 success, 2 usage or domain error, 3 structural
error (for example a Page root count other than two).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .berger import (
    distinct_spectrum_at,
    eleven_slot_table,
    kth_distinct_piecewise,
    spectrum_with_multiplicity,
)
from .jacobi import jacobi_shift
from .page import (
    PageConfigError,
    PageConstants,
    PageStructureError,
    page_constants,
    page_index_nullity,
    page_slice,
    page_transition_roots,
)
from .slices import cp2_lambda1, cp2_slice, slice_index_nullity, slice_spectrum
from .spheres import sphere_spectrum

PRECISION_ENV = "BERGERSPEC_PRECISION"
MAX_PRECISION = 30


@dataclass(frozen=True)
class OutputRequest:
    """Where and how a command's table should be written."""

    format: str = "csv"
    precision: int = 12
    output: str | None = None


Row = dict[str, Any]
Table = tuple[list[str], list[str], list[Row]]  # comments, fieldnames, rows


def _fmt_real(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


def _cell(value: Any, precision: int) -> str:
    if isinstance(value, bool):
        raise TypeError("boolean cells are not part of any table")
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_real(value, precision)
    return str(value)


def _json_cell(value: Any, precision: int) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return float(_fmt_real(value, precision))
    return str(value)


def emit(table: Table, request: OutputRequest) -> None:
    comments, fields, rows = table
    if request.format == "json":
        payload = [
            {k: _json_cell(row[k], request.precision) for k in fields} for row in rows
        ]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        for c in comments:
            buf.write(f"# {c}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow(_cell(row[k], request.precision) for k in fields)
        text = buf.getvalue()
    if request.output is None:
        sys.stdout.write(text)
    else:
        with open(request.output, "w") as fh:
            fh.write(text)


def _mode_label(modes) -> str:
    return "+".join(m.label() for m in modes)


def handle_sphere(args: argparse.Namespace) -> Table:
    rows = [
        {"k": e.degree, "eigenvalue": e.eigenvalue, "multiplicity": e.multiplicity}
        for e in sphere_spectrum(args.dim, args.kmax)
    ]
    comments = [f"spectrum of the round {args.dim}-sphere through degree {args.kmax}"]
    return comments, ["k", "eigenvalue", "multiplicity"], rows


def handle_berger(args: argparse.Namespace) -> Table:
    if (args.t is None) == (args.epsilon is None):
        raise ValueError("exactly one of --t and --epsilon is required")
    if args.t is not None:
        if args.t <= 0:
            raise ValueError(f"--t must be positive, got {args.t}")
        t = Fraction(args.t)
        x = 1 / t**3
        scale = t  # eigenvalue is t (A + B x)
        comments = [f"Berger sphere spectrum at t = {t} (x = t^-3 = {x})"]
    else:
        if args.epsilon <= 0:
            raise ValueError(f"--epsilon must be positive, got {args.epsilon}")
        eps = Fraction(args.epsilon)
        x = 1 / eps**2
        scale = Fraction(1)  # t (A + B x) / mu with mu = t = eps^(2/3)
        comments = [
            f"spectrum of sigma_1^2 + sigma_2^2 + eps^2 sigma_3^2 at eps = {eps} "
            f"(x = eps^-2 = {x})"
        ]
    fields = ["n", "value", "A", "B", "mode"]
    if args.with_multiplicity:
        fields.append("multiplicity")
    rows: list[Row] = []
    for n, (value, mult, modes) in enumerate(spectrum_with_multiplicity(x, args.count)):
        m0 = modes[0]
        row: Row = {
            "n": n,
            "value": float(scale * value),
            "A": Fraction(m0.A),
            "B": Fraction(m0.B),
            "mode": _mode_label(modes),
        }
        if args.with_multiplicity:
            row["multiplicity"] = mult
        rows.append(row)
    return comments, fields, rows


def handle_piecewise(args: argparse.Namespace) -> Table:
    if (args.index is None) == (args.slot is None):
        raise ValueError("exactly one of --index and --slot is required")
    try:
        x_max = Fraction(args.xmax)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"--xmax must be a rational, got {args.xmax!r}") from None
    if x_max <= 0:
        raise ValueError(f"--xmax must be positive, got {args.xmax}")
    if args.index is not None:
        cells = kth_distinct_piecewise(args.index, x_max)
        comments = [
            f"branch partition of distinct nonzero eigenvalue {args.index} on (0, {x_max}]",
            "eigenvalue = t (A + B x) on each cell, x = t^-3",
        ]
    else:
        table = eleven_slot_table()
        if not 1 <= args.slot <= len(table):
            raise ValueError(f"--slot must be in 1..{len(table)}, got {args.slot}")
        cells = [
            c
            for c in table[args.slot - 1]
            if c.lo < x_max
        ]
        comments = [
            f"curve {args.slot} of the eleven-curve table on (0, {x_max}]",
            "slots keep their branch identity across crossings; they are not",
            "the ascending distinct-value order wherever curves have crossed",
        ]
    rows = []
    for c in cells:
        hi = x_max if (c.hi == 0 or c.hi > x_max) else c.hi
        rows.append(
            {
                "lo": c.lo,
                "hi": hi,
                "A": Fraction(c.branch.A),
                "B": Fraction(c.branch.B),
                "mode": c.branch.label(),
            }
        )
    return comments, ["lo", "hi", "A", "B", "mode"], rows


def _page_setup(args: argparse.Namespace) -> PageConstants:
    return page_constants(path=args.page_config) if args.page_config else page_constants()


def _index_row(r: float, geom, report) -> Row:
    shift = jacobi_shift(geom.ambient)
    first_shifted = slice_spectrum(geom, 2)[1].value - shift
    return {
        "r": r,
        "index": report.index,
        "nullity": report.nullity,
        "first_shifted": first_shifted,
        "bound": report.truncation_bound,
    }


def handle_index(args: argparse.Namespace) -> Table:
    chosen = [name for name in ("r", "scan", "roots") if getattr(args, name)]
    if len(chosen) != 1:
        raise ValueError("exactly one of --r, --scan, --roots is required")
    fields = ["r", "index", "nullity", "first_shifted", "bound"]
    if args.space == "cp2":
        if args.roots:
            raise ValueError("--roots applies only to the page family")
        comments = ["cp2 geodesic spheres, Jacobi shift 3/2"]
        radii = [args.r] if args.r else _scan_grid(args.scan, positive=True)
        rows = []
        for r in radii:
            geom = cp2_slice(r)
            report = slice_index_nullity(geom, args.depth)
            rows.append(_index_row(r, geom, report))
        return comments, fields, rows
    consts = _page_setup(args)
    r1, r2 = page_transition_roots(args.tol, consts)
    comments = [
        f"page family, Jacobi shift {_fmt_real(consts.shift, 12)}",
        f"certified roots (tol {args.tol:g}): r1 = {r1!r}, r2 = {r2!r}",
    ]
    if args.roots:
        rows = [{"root": "r1", "r": r1}, {"root": "r2", "r": r2}]
        return comments, ["root", "r"], rows
    radii = [args.r] if args.r else _scan_grid(args.scan, upper=math.pi)
    rows = []
    for r in radii:
        geom = page_slice(r, consts)
        report = page_index_nullity(r, args.depth, constants=consts)
        rows.append(_index_row(r, geom, report))
    return comments, fields, rows


def _scan_grid(scan: list[float], positive: bool = False, upper: float | None = None) -> list[float]:
    rmin, rmax, steps = scan
    n = int(steps)
    if n < 2 or n != steps:
        raise ValueError(f"scan steps must be an integer >= 2, got {steps}")
    if rmin >= rmax:
        raise ValueError(f"scan needs rmin < rmax, got [{rmin}, {rmax}]")
    if positive and rmin <= 0:
        raise ValueError(f"scan range must be positive, got rmin = {rmin}")
    if upper is not None and not (0 < rmin and rmax < upper):
        raise ValueError(f"scan range must lie in (0, {upper:g}), got [{rmin}, {rmax}]")
    step = (rmax - rmin) / (n - 1)
    return [rmin + k * step for k in range(n)]


def handle_plotdata(args: argparse.Namespace) -> Table:
    if args.figure == "fig1":
        comments = [
            "eleven smallest distinct nonzero eigenvalues of g_B^t, ascending at each t",
            "where branches cross (for example the second and third values at x = t^-3 <= 1)",
            "the ascending order differs from following a single branch curve",
        ]
        fields = ["t"] + [f"l{j}" for j in range(1, 12)]
        rows = []
        for k in range(10, 241):
            t = Fraction(k, 200)
            x = 1 / t**3
            values = [v for v, _ in distinct_spectrum_at(x, 12)][1:]
            row: Row = {"t": float(t)}
            for j, v in enumerate(values, start=1):
                row[f"l{j}"] = float(t * v)
            rows.append(row)
        return comments, fields, rows
    if args.figure == "fig2":
        comments = ["first Jacobi eigenvalue of the cp2 geodesic spheres: lambda_1(r) - 3/2"]
        fields = ["r", "jacobi_lambda1"]
        rows = []
        for k in range(5, 601):
            r = k / 100
            rows.append({"r": r, "jacobi_lambda1": cp2_lambda1(r) - 1.5})
        return comments, fields, rows
    consts = _page_setup(args)
    r1, r2 = page_transition_roots(1e-6, consts)
    comments = [
        "first six shifted distinct eigenvalues of the page slices",
        f"transition roots: r1 = {r1!r}, r2 = {r2!r}",
    ]
    fields = ["r"] + [f"ev{j}" for j in range(1, 7)]
    rows = []
    for k in range(1, 512):
        r = k * math.pi / 512
        geom = page_slice(r, consts)
        shift = jacobi_shift(geom.ambient)
        entries = slice_spectrum(geom, 6)
        row = {"r": r}
        for j, e in enumerate(entries, start=1):
            row[f"ev{j}"] = e.value - shift
        rows.append(row)
    return comments, fields, rows


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--precision", type=int, default=None, help="significant digits for real columns")
    p.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bergerspec",
        description="Exact Berger sphere spectra and Jacobi index profiles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sphere", help="round p-sphere Laplace spectrum")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    _add_output_flags(p)
    p.set_defaults(handler=handle_sphere)

    p = sub.add_parser("berger", help="Berger sphere spectrum at fixed t or epsilon")
    # Fraction parses "1/2", "0.2" and "1e-3" exactly; floats would smuggle
    # binary rounding into the exact columns
    p.add_argument("--t", type=Fraction, default=None)
    p.add_argument("--epsilon", type=Fraction, default=None)
    p.add_argument("--count", type=int, default=12)
    p.add_argument("--with-multiplicity", action="store_true")
    _add_output_flags(p)
    p.set_defaults(handler=handle_berger)

    p = sub.add_parser("piecewise", help="branch partition of one eigenvalue curve")
    p.add_argument("--index", type=int, default=None, help="position among distinct nonzero values")
    p.add_argument("--slot", type=int, default=None, help="curve number in the eleven-curve table")
    p.add_argument("--xmax", default="20")
    _add_output_flags(p)
    p.set_defaults(handler=handle_piecewise)

    p = sub.add_parser("index", help="Jacobi index/nullity profiles")
    p.add_argument("space", choices=("cp2", "page"))
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--scan", type=float, nargs=3, metavar=("RMIN", "RMAX", "STEPS"), default=None)
    p.add_argument("--roots", action="store_true", help="print the two page transition roots")
    p.add_argument("--depth", type=int, default=25)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--page-config", default=None, help="alternate constants file")
    _add_output_flags(p)
    p.set_defaults(handler=handle_index)

    p = sub.add_parser("plotdata", help="dense data behind the standard figures")
    p.add_argument("figure", choices=("fig1", "fig2", "fig3"))
    p.add_argument("--page-config", default=None, help="alternate constants file")
    _add_output_flags(p)
    p.set_defaults(handler=handle_plotdata)

    return parser


def _resolve_request(args: argparse.Namespace) -> OutputRequest:
    precision = args.precision
    if precision is None:
        env = os.environ.get(PRECISION_ENV)
        if env is not None:
            try:
                precision = int(env)
            except ValueError:
                raise ValueError(f"{PRECISION_ENV} must be an integer, got {env!r}") from None
        else:
            precision = 12
    if not 1 <= precision <= MAX_PRECISION:
        raise ValueError(f"precision must be in 1..{MAX_PRECISION}, got {precision}")
    return OutputRequest(format=args.format, precision=precision, output=args.output)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        request = _resolve_request(args)
        table = args.handler(args)
    except (PageConfigError, PageStructureError) as exc:
        print(f"bergerspec: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"bergerspec: {exc}", file=sys.stderr)
        return 2
    try:
        emit(table, request)
    except OSError as exc:
        print(f"bergerspec: cannot write {request.output}: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
