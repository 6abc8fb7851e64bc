"""Command-line front end: ``treecoeffs {gen,enum,invariants,verify}``.

Exit codes: 0 success / verified, 1 violation found, 2 usage error,
3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import extremal
from .energy import QuadratureError, adjacency_spectrum, coulson_energy_of_subdivision, spectral_summary
from .laplacian import coefficients_via_charpoly, coefficients_via_subdivision, phi_eval
from .poly import format_rational, parse_rational
from .trees import (
    DEFAULT_MAX_VERTICES,
    Tree,
    TreeError,
    canonical_code,
    enumerate_trees,
    make_broom,
    make_complete_d_ary,
    make_greedy,
    make_path,
    make_star,
    subdivide,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CROSSCHECK = 0, 1, 2, 3
COULSON_TOL = 1e-6
SPECTRUM_TOL = 1e-8

CLASS_STATEMENTS = {
    "thm37": lambda n, dp, a: extremal.verify_greedy_min_matching(n, dp, a.x_grid, jobs=a.jobs),
    "thm13": lambda n, dp, a: extremal.verify_greedy_min_matching(n, dp, a.x_grid, jobs=a.jobs, via_phi=True),
    "thm14": lambda n, dp, a: extremal.verify_ie_min(n, dp, jobs=a.jobs),
    "thm43-lem42": lambda n, dp, a: extremal.verify_broom_max(n, dp, a.x_grid, jobs=a.jobs),
    "cor39": lambda n, dp, a: extremal.check_hosoya_min(n, dp, jobs=a.jobs),
    "conj46": lambda n, dp, a: extremal.check_conjecture46(n, dp, jobs=a.jobs),
}
OTHER_STATEMENTS = ("cor45", "lem31", "lem44", "lem24", "thm25-random")
STATEMENTS = tuple(CLASS_STATEMENTS) + OTHER_STATEMENTS

GEN_HELP = """\
vertex labeling:
  path    0-1-...-(n-1)
  star    center 0, leaves 1..n-1
  greedy  breadth-first fill: root 0 gets dplus1 children, later vertices dplus1-1
  broom   path 0-1-...-(n-dplus1), leaves n-dplus1+1..n-1 attached to 0
  dary    complete d-ary tree C_h, children of i are d*i+1..d*i+d
"""

VERIFY_HELP = """\
statements:
  thm37 thm13 thm14 thm43-lem42 cor39 conj46   per class, use --n A..B and --dplus1
  cor45                                         all trees with n in --n A..B
  lem31                                         --d and --hmax
  lem44                                         --nmax and --ds
  lem24 thm25-random                            --samples --nmax --seed

CSV columns: statement,n,dplus1,trees,violations,seconds
conj46 always exits 0; its report lists any counterexamples.
"""


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty or invalid range {text!r}")
    return range(lo, hi + 1)


def parse_grid(text: str) -> tuple[Fraction, ...]:
    try:
        xs = tuple(parse_rational(p) for p in text.split(",") if p.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad x grid {text!r}: {exc}") from None
    if not xs or any(x <= 0 for x in xs):
        raise UsageError("x grid entries must be positive")
    return xs


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treecoeffs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print one constructed tree as JSON", epilog=GEN_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    g.add_argument("kind", choices=["path", "star", "greedy", "broom", "dary"])
    g.add_argument("--n", type=int)
    g.add_argument("--dplus1", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--h", type=int)
    g.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)

    e = sub.add_parser("enum", help="stream one JSON tree per isomorphism class")
    e.add_argument("--n", required=True)
    e.add_argument("--dplus1", type=int, help="maximum degree bound (default n-1)")
    e.add_argument("--exact", action="store_true", help="maximum degree exactly --dplus1")
    e.add_argument("--codes", action="store_true", help="add the canonical code as hex")

    i = sub.add_parser("invariants", help="read a tree JSON on stdin, print its invariants")
    i.add_argument("--x-grid", default="1/4,1/2,1,2,4")
    i.add_argument("--out")

    v = sub.add_parser("verify", help="check one extremal statement", epilog=VERIFY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    v.add_argument("statement", choices=STATEMENTS)
    v.add_argument("--n", "--n-range", dest="n_range", default="4..12")
    v.add_argument("--dplus1", type=int, default=3)
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--hmax", type=int, default=8)
    v.add_argument("--ds", default="2,3,4")
    v.add_argument("--nmax", type=int)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--x-grid", default="1/4,1/2,1,2,4")
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--out")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    v.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON output")
    return p


def cmd_gen(args) -> int:
    def need(*names):
        missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
        if missing:
            raise UsageError(f"gen {args.kind} needs {' '.join(missing)}")

    if args.kind in ("path", "star"):
        need("n")
        t = (make_path if args.kind == "path" else make_star)(args.n)
    elif args.kind in ("greedy", "broom"):
        need("n", "dplus1")
        t = (make_greedy if args.kind == "greedy" else make_broom)(args.n, args.dplus1)
    else:
        need("d", "h")
        t = make_complete_d_ary(args.d, args.h, args.max_vertices).tree
    if t.n > args.max_vertices:
        raise UsageError(f"tree has {t.n} vertices, over --max-vertices {args.max_vertices}")
    print(_dump(t.to_json()))
    return EXIT_OK


def cmd_enum(args) -> int:
    ns = parse_range(args.n)
    for n in ns:
        bound = args.dplus1 if args.dplus1 is not None else max(n - 1, 1)
        for t in enumerate_trees(n, bound, exact=args.exact):
            obj = t.to_json()
            if args.codes:
                obj["code"] = canonical_code(t).hex()
            print(_dump(obj))
    return EXIT_OK


def invariants_record(t: Tree, xs: Sequence[Fraction]) -> tuple[dict, list[str]]:
    """All invariants of ``t`` plus the list of failed cross-checks."""
    failures = []
    coeffs = coefficients_via_subdivision(t)
    if coefficients_via_charpoly(t) != coeffs:
        failures.append("Laplacian coefficients: subdivision route != characteristic polynomial")
    summary = spectral_summary(t)
    failures += summary.check()
    mu = summary.laplacian_eigenvalues
    expected = sorted([math.sqrt(m) for m in mu[:-1]] + [-math.sqrt(m) for m in mu[:-1]] + [0.0])
    actual = sorted(adjacency_spectrum(subdivide(t)))
    if any(abs(a - b) > SPECTRUM_TOL for a, b in zip(expected, actual)):
        failures.append("adjacency spectrum of S(T) != {+-sqrt(mu)} + {0}")
    coulson = coulson_energy_of_subdivision(t)
    if abs(coulson - summary.subdivision_energy) > COULSON_TOL:
        failures.append(f"Coulson energy off by {abs(coulson - summary.subdivision_energy):.3e}")
    record = {
        "n": t.n,
        "coefficients": coeffs.to_json(),
        "matching_poly_of_subdivision": coeffs.as_poly().to_json(),
        "phi_at_grid": {format_rational(x): format_rational(phi_eval(coeffs, x)) for x in xs},
        "hosoya_of_subdivision": str(coeffs.as_poly()(1)),
        "spectrum": [round(v, 12) for v in mu],
        "lel": round(summary.lel, 12),
        "ie": round(summary.ie, 12),
        "subdivision_energy": round(summary.subdivision_energy, 12),
        "coulson_energy": round(coulson, 12),
    }
    return record, failures


def cmd_invariants(args, stdin) -> int:
    xs = parse_grid(args.x_grid)
    try:
        t = Tree.from_json(json.loads(stdin.read()))
    except (json.JSONDecodeError, TreeError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed tree JSON: {exc}") from None
    try:
        record, failures = invariants_record(t, xs)
    except QuadratureError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    if failures:
        for f in failures:
            print(f"cross-check failed: {f}", file=sys.stderr)
        return EXIT_CROSSCHECK
    _write(_dump(record) + "\n", args.out)
    return EXIT_OK


def run_verify(args) -> list[extremal.VerificationReport]:
    xs = args.x_grid
    s = args.statement
    if s in CLASS_STATEMENTS:
        ns = parse_range(args.n_range)
        if args.dplus1 < 2:
            raise UsageError("--dplus1 must be at least 2")
        reports = [CLASS_STATEMENTS[s](n, args.dplus1, args) for n in ns if n >= args.dplus1 + 1]
        if not reports:
            empty = extremal.VerificationReport(s, {"n": f"{ns.start}..{ns.stop - 1}", "dplus1": args.dplus1})
            empty.details["note"] = "no order in range admits the class"
            reports = [empty]
        return reports
    if s == "cor45":
        ns = parse_range(args.n_range)
        return [extremal.check_star_path(ns.stop - 1, xs, nmin=max(ns.start, 2))]
    if s == "lem31":
        return [extremal.check_tau_chain(args.d, args.hmax, xs, args.max_vertices)]
    if s == "lem44":
        ds = [int(p) for p in args.ds.split(",") if p.strip()]
        nmax = args.nmax if args.nmax is not None else parse_range(args.n_range).stop - 1
        return [extremal.check_cross_degree(nmax, ds, xs)]
    nmax = args.nmax if args.nmax is not None else 14
    if s == "lem24":
        return [extremal.verify_subtree_monotonicity(args.samples, nmax, xs, args.seed)]
    return [extremal.verify_exchange_random(args.samples, nmax, xs, args.seed)]


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    args.x_grid = parse_grid(args.x_grid)
    try:
        reports = run_verify(args)
    except (ValueError, TreeError) as exc:
        raise UsageError(str(exc)) from None
    verified = all(r.verified for r in reports)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(extremal.CSV_HEADER)
        for r in reports:
            w.writerow(r.csv_row())
        text = buf.getvalue()
    else:
        text = _dump(
            {
                "statement": args.statement,
                "verified": verified,
                "reports": [r.to_json(timing=args.timing) for r in reports],
            }
        ) + "\n"
    _write(text, args.out)
    if args.statement == "conj46":
        return EXIT_OK
    return EXIT_OK if verified else EXIT_VIOLATION


def main(argv: Sequence[str] | None = None, stdin=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "enum":
            return cmd_enum(args)
        if args.command == "invariants":
            return cmd_invariants(args, stdin if stdin is not None else sys.stdin)
        return cmd_verify(args)
    except (UsageError, TreeError) as exc:
        print(f"treecoeffs: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
