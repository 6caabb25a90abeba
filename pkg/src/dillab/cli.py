"""Command-line front end.

One binary, subcommand style, sharing the exact-arithmetic core. Output is
canonical JSON (sorted keys, compact separators, trailing newline) unless a
command is a matrix/CSV emitter; every decimal field in a report sits next
to its exact rational form so certificates survive copy-paste. File writes
go through a temp file and os.replace.

Exit status: 0 success, 1 failed assertion or domain error, 2 usage error,
3 IO error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction

from .bounds import SANDWICH_CSV_HEADER, sandwich_table
from .dilpoly import build_T, build_Tm, largest_root, verify_lroot
from .enclosures import decimal_str
from .errors import DillabError
from .families import COVER_CSV_HEADER, cover_upper_bound, torus_matrix, verify_torus_bounds
from .intmatrix import (
    is_irreducible,
    is_positive,
    load_matrix,
    pf_enclosure,
    render_matrix_json,
    render_matrix_text,
)
from .lefschetz import HomologyClass, multitwist_action
from .suites import SUITES, run_suite
from .transgraph import (
    dilatation_limit_check,
    from_matrix,
    path_count_series,
    subdivide_out_edge,
    to_matrix,
)

__all__ = ["main"]


class UsageError(Exception):
    """Bad argument values discovered after flag parsing."""


def _canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".dillab-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def _emit(ns: argparse.Namespace, text: str) -> None:
    out = getattr(ns, "out", None)
    if out:
        _write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _csv_row_text(row) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerow(row)
    return buf.getvalue()


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r} ({exc})") from None


def _parse_range(text: str) -> tuple[int, int]:
    """'31:100' -> (31, 100); a single integer means a one-point range."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            v = int(parts[0])
            return (v, v)
        if len(parts) == 2:
            return (int(parts[0]), int(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"expected LO:HI or a single integer, got {text!r}")


def _load_graph(path: str):
    return from_matrix(load_matrix(path))


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------


def _cmd_pf(ns: argparse.Namespace) -> int:
    matrix = load_matrix(ns.matrix)
    payload = {
        "k": matrix.k,
        "irreducible": is_irreducible(matrix),
        "positive": is_positive(matrix),
    }
    if payload["irreducible"]:
        enc = pf_enclosure(matrix, rel_width=ns.rel_width, max_iters=ns.max_iters)
        payload["enclosure"] = enc.to_json_dict()
    _emit(ns, _canonical_json(payload))
    return 0


def _cmd_paths(ns: argparse.Namespace) -> int:
    graph = _load_graph(ns.graph)
    counts = path_count_series(graph, ns.vertex, ns.d_max)
    payload = {
        "vertex": ns.vertex,
        "d_max": ns.d_max,
        "counts": [str(c) for c in counts],
    }
    if ns.check:
        rep = dilatation_limit_check(graph, ns.vertex, ns.d_max, ns.tol)
        payload["limit_check"] = rep.to_json_dict()
    _emit(ns, _canonical_json(payload))
    return 0


def _cmd_subdivide(ns: argparse.Namespace) -> int:
    graph = _load_graph(ns.graph)
    sub = subdivide_out_edge(graph, ns.vertex)
    matrix = to_matrix(sub)
    if ns.format == "json":
        _emit(ns, _canonical_json(render_matrix_json(matrix)))
    else:
        _emit(ns, render_matrix_text(matrix))
    return 0


def _cmd_hk_root(ns: argparse.Namespace) -> int:
    if ns.m is None and (ns.s is None or ns.t is None):
        raise UsageError("need --m, or both --s and --t")
    if ns.m is not None and (ns.s is not None or ns.t is not None):
        raise UsageError("--m conflicts with --s/--t")
    payload: dict = {}
    if ns.m is not None:
        poly = build_Tm(ns.m)
        payload["m"] = ns.m
        if ns.m >= 5:
            rep = verify_lroot(ns.m)
            root = rep.root
            payload["bound_report"] = {
                "bound_holds": rep.bound_holds,
                "ineq1": rep.ineq1,
                "ineq2": rep.ineq2,
                "ineq3": rep.ineq3,
                "m_power_lo": decimal_str(rep.m_power_enclosure.lo, rounding="floor"),
                "m_power_hi": decimal_str(rep.m_power_enclosure.hi, rounding="ceil"),
            }
        else:
            hi = ns.search_hi if ns.search_hi is not None else Fraction(4)
            root = largest_root(poly, hi, rel_width=ns.rel_width)
    else:
        poly = build_T(ns.s, ns.t)
        payload["s"], payload["t"] = ns.s, ns.t
        hi = ns.search_hi if ns.search_hi is not None else Fraction(4)
        root = largest_root(poly, hi, rel_width=ns.rel_width)
    payload["polynomial"] = poly.to_json_dict()
    payload["root"] = root.to_json_dict()
    _emit(ns, _canonical_json(payload))
    return 0


def _cmd_torus_matrix(ns: argparse.Namespace) -> int:
    spec = torus_matrix(ns.n)
    if ns.verify:
        report = verify_torus_bounds(spec)
        payload = {
            "n": ns.n,
            "matrix": render_matrix_json(spec.matrix),
            "report": report.to_json_dict(),
        }
        _emit(ns, _canonical_json(payload))
    elif ns.format == "json":
        _emit(ns, _canonical_json(render_matrix_json(spec.matrix)))
    else:
        _emit(ns, render_matrix_text(spec.matrix))
    return 0


def _cmd_cover_bound(ns: argparse.Namespace) -> int:
    report = cover_upper_bound(ns.g, ns.n)
    if ns.csv:
        _append_csv_row(ns.csv, COVER_CSV_HEADER, report.csv_row())
    _emit(ns, _canonical_json(report.to_json_dict()))
    return 0


def _append_csv_row(path: str, header, row) -> None:
    """Read-modify-write append with an atomic replace, creating the file
    (header first) when missing."""
    header_line = _csv_text(header, [])
    if os.path.exists(path):
        with open(path, "r") as fh:
            existing = fh.read()
        if not existing.startswith(header_line.rstrip("\n")):
            raise DillabError(f"{path} exists with a different header")
        if existing and not existing.endswith("\n"):
            existing += "\n"
    else:
        existing = header_line
    _write_atomic(path, existing + _csv_row_text(row))


def _cmd_bounds_table(ns: argparse.Namespace) -> int:
    n_lo, n_hi = _parse_range(ns.n)
    report = sandwich_table(ns.g, n_lo, n_hi, sample=ns.sample)
    if ns.format == "json":
        _emit(ns, _canonical_json(report.to_json_dict()))
    elif ns.format == "text":
        lines = ["  ".join(str(v) for v in SANDWICH_CSV_HEADER)]
        lines += ["  ".join(str(v) for v in row.csv_row()) for row in report.rows]
        _emit(ns, "\n".join(lines) + "\n")
    else:
        _emit(ns, _csv_text(SANDWICH_CSV_HEADER, [row.csv_row() for row in report.rows]))
    return 0


def _parse_twists(spec_text: str, g: int):
    """Grammar: comma-separated CLASS:POWER tokens. CLASS is a<i> or b<i>
    (1-based basis curves) or 0 for a separating (homologically trivial)
    curve; POWER is a nonzero integer."""
    twists = []
    echo = []
    for token in spec_text.split(","):
        token = token.strip()
        if not token:
            continue
        name, sep, power_text = token.partition(":")
        if not sep:
            raise UsageError(f"twist {token!r}: expected CLASS:POWER")
        try:
            power = int(power_text)
        except ValueError:
            raise UsageError(f"twist {token!r}: power must be an integer") from None
        name = name.strip()
        if name == "0":
            cls = HomologyClass.zero(g)
        elif name[:1] in ("a", "b") and name[1:].isdigit():
            index = int(name[1:])
            if not 1 <= index <= g:
                raise UsageError(f"twist {token!r}: index outside 1..{g}")
            maker = HomologyClass.alpha if name[0] == "a" else HomologyClass.beta
            cls = maker(index, g)
        else:
            raise UsageError(f"twist {token!r}: class must be a<i>, b<i>, or 0")
        twists.append((cls, power))
        echo.append([name, power])
    if not twists:
        raise UsageError("no twists given")
    return twists, echo


def _cmd_lefschetz(ns: argparse.Namespace) -> int:
    twists, echo = _parse_twists(ns.twists, ns.g)
    action = multitwist_action(twists, ns.g)
    payload = {
        "g": ns.g,
        "twists": echo,
        "matrix": [list(row) for row in action.matrix],
        "trace": action.trace,
        "lefschetz_number": 2 - action.trace,
    }
    _emit(ns, _canonical_json(payload))
    return 0


def _cmd_verify(ns: argparse.Namespace) -> int:
    if ns.list:
        for name, spec in SUITES.items():
            sys.stdout.write(f"{name}: {spec.summary} (default {spec.default_cases} {spec.cases_meaning})\n")
        return 0
    if ns.all:
        names = list(SUITES)
    elif ns.suite:
        names = []
        for name in ns.suite:
            if name not in SUITES:
                raise UsageError(f"unknown suite {name!r}; see `verify --list`")
            names.append(name)
    else:
        raise UsageError("need --all or --suite NAME")
    reports = [run_suite(name, seed=ns.seed, cases=ns.cases, jobs=ns.jobs) for name in names]
    payload = {
        "seed": ns.seed,
        "suites": reports,
        "all_passed": all(r["passed"] for r in reports),
    }
    text = _canonical_json(payload)
    if ns.out:
        _write_atomic(ns.out, text)
        for rep in reports:
            status = "PASS" if rep["passed"] else "FAIL"
            sys.stdout.write(f"{rep['suite']}: {status} ({rep['failure_count']} failures / {rep['cases']} cases)\n")
    else:
        sys.stdout.write(text)
    return 0 if payload["all_passed"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _jobs_default() -> int:
    raw = os.environ.get("DILLAB_JOBS", "").strip()
    if not raw:
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise UsageError(f"DILLAB_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise UsageError("DILLAB_JOBS must be >= 1")
    return jobs


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dillab",
        description="Certified dilatation bounds, transition-graph spectra, and Lefschetz numbers.",
    )
    from . import __version__

    parser.add_argument("--version", action="version", version=f"dillab {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("pf", help="spectral enclosure of a nonnegative integer matrix file")
    p.add_argument("matrix", help="matrix file, text or JSON")
    p.add_argument("--rel-width", type=_parse_fraction, default=Fraction(1, 10**9))
    p.add_argument("--max-iters", type=int, default=10**6)
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=_cmd_pf)

    p = sub.add_parser("paths", help="path counts from a vertex of a transition graph")
    p.add_argument("graph", help="graph file (matrix formats)")
    p.add_argument("--vertex", "-i", type=int, required=True)
    p.add_argument("--d-max", "-d", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare the d-th root against the spectral enclosure")
    p.add_argument("--tol", type=_parse_fraction, default=Fraction(1, 20))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("subdivide", help="subdivide the out-edge of a degree-(1,1) vertex")
    p.add_argument("graph")
    p.add_argument("--vertex", "-i", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_subdivide)

    p = sub.add_parser("hk-root", help="largest root of a balanced dilatation polynomial")
    p.add_argument("--m", type=int, help="balanced index; m >= 5 adds the m^(3/m) bound report")
    p.add_argument("--s", type=int, help="first exponent (with --t)")
    p.add_argument("--t", type=int, help="second exponent (with --s)")
    p.add_argument("--rel-width", type=_parse_fraction, default=Fraction(1, 10**10))
    p.add_argument("--search-hi", type=_parse_fraction, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_hk_root)

    p = sub.add_parser("torus-matrix", help="marked-torus cover transition matrix for a given n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="check the reconstruction contract and report log bounds")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_torus_matrix)

    p = sub.add_parser("cover-bound", help="certified upper dilatation bound from the branched cover family")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", help="append the row to this CSV file (created with header if missing)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_cover_bound)

    p = sub.add_parser("bounds", help="bound tables")
    bounds_sub = p.add_subparsers(dest="bounds_command", metavar="SUBCOMMAND")
    t = bounds_sub.add_parser("table", help="two-sided certified table over a range of n")
    t.add_argument("--g", type=int, required=True)
    t.add_argument("--n", required=True, help="range LO:HI")
    t.add_argument("--sample", type=int, default=None, help="log-uniform sample size instead of every n")
    t.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    t.add_argument("--out")
    t.set_defaults(func=_cmd_bounds_table)

    p = sub.add_parser("lefschetz", help="Lefschetz number of a multitwist")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--twists", required=True, help='e.g. "a1:3,a2:-1"; 0:P twists a separating curve')
    p.add_argument("--out")
    p.set_defaults(func=_cmd_lefschetz)

    p = sub.add_parser("verify", help="run verification suites; nonzero exit on any failure")
    p.add_argument("--all", action="store_true", help="every suite in the registry")
    p.add_argument("--suite", action="append", help="suite name (repeatable)")
    p.add_argument("--list", action="store_true", help="list suites and exit")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--cases", type=int, default=None, help="override each suite's default case count")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: DILLAB_JOBS or 1)")
    p.add_argument("--out", help="write the JSON report here and print a summary")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    try:
        ns = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(ns, "func"):
        sys.stderr.write("error: missing subcommand (try --help)\n")
        return 2
    try:
        if getattr(ns, "command", None) == "verify" and ns.jobs is None:
            ns.jobs = _jobs_default()
        return int(ns.func(ns) or 0)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return 3
    except (DillabError, AssertionError, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
