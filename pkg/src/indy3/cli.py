"""``indy3`` command line.  Exit codes: 0 ok, 1 usage or input error, 2 failed verification."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import attractor as att
from .classify import classify
from .cubic import Cubic, from_profile
from .enumerate import enumerate_realizable_triples, find_witness
from .graphs import (GraphFormatError, composition_profile, family_profile, independence_profile,
                     lexicographic_product, make_family, parse_graph)
from .io import fmt, read_points_csv, write_catalog_csv, write_pgm, write_points_csv
from .tables import TABLES, verify_table

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _cx(z: complex) -> str:
    if z.imag == 0:
        return fmt(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def _cubic(args) -> Cubic:
    return Cubic(args.a1, args.a2, args.a3, formal=True)


def _read_graph(path):
    try:
        with open(path) as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must look like 400x300, got {text!r}") from None


# -- commands ------------------------------------------------------------------

def cmd_classify(args) -> int:
    if args.graph:
        g = _read_graph(args.graph)
        prof = independence_profile(g)
        print(f"profile: {' '.join(map(str, prof.coeffs))}  (d = {prof.d})")
        if prof.d != 3:
            raise UsageError(f"independence number is {prof.d}; classification needs d = 3")
        P = from_profile(prof, formal=True)
    else:
        if None in (args.a1, args.a2, args.a3):
            raise UsageError("give a1 a2 a3 or --graph FILE")
        P = _cubic(args)
    rep = classify(P, max_iter=args.max_iter, search=True)
    d = rep.to_dict()
    print(f"P(z) = {P}")
    for key in ("taxonomy", "subcase", "verdict", "explicit_description",
                "attractor_composition", "realizable", "evidence"):
        if d[key] is not None:
            print(f"{key}: {d[key]}")
    s = rep.structure
    print(f"c1: {_cx(s.c1)}  c2: {_cx(s.c2)}")
    print(f"delta1: {_cx(s.delta1)}  delta2: {_cx(s.delta2)}")
    print("multipliers: " + ", ".join(_cx(m) for m in s.fixed_multipliers))
    print(f"critical disk: center {_cx(s.critical_disk.center)}, radius {fmt(s.critical_disk.radius)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(d, fh, indent=2)
    return EXIT_OK


def cmd_attract(args) -> int:
    P = _cubic(args)
    ps = att.approximate_attractor(P, depth=args.depth, sample=args.sample, seed=args.seed)
    write_points_csv(ps, args.out)
    print(f"{len(ps)} distinct points ({ps.total} with multiplicity), "
          f"{ps.meta['flagged']} flagged, written to {args.out}")
    return EXIT_OK


def cmd_julia(args) -> int:
    ps = att.julia_inverse_sample(_cubic(args), args.iters, args.seed)
    write_points_csv(ps, args.out)
    print(f"{ps.total} points written to {args.out}")
    return EXIT_OK


def cmd_render(args) -> int:
    P = _cubic(args)
    window = None
    if args.window:
        cx, cy, w, h = args.window
        window = att.Window(complex(cx, cy), w, h)
    grid = att.escape_time_grid(P, window, args.size, args.max_iter)
    write_pgm(grid, args.out)
    w, h = grid.resolution
    print(f"{w}x{h} escape-time image written to {args.out}")
    return EXIT_OK


# distances print as the shortest exact repr so they can be compared to 1e-12

def cmd_hausdorff(args) -> int:
    print(repr(att.hausdorff_distance(read_points_csv(args.a), read_points_csv(args.b))))
    return EXIT_OK


def cmd_diameter(args) -> int:
    print(repr(att.diameter(read_points_csv(args.file))))
    return EXIT_OK


def cmd_product(args) -> int:
    g = _read_graph(args.graph)
    gg = lexicographic_product(g, g)
    got = independence_profile(gg)
    print(f"G x G: {gg.n} vertices, profile {' '.join(map(str, got.coeffs))}")
    if args.verify:
        want = composition_profile(independence_profile(g))
        if got != want:
            print(f"FAIL composition identity: expected {' '.join(map(str, want.coeffs))}")
            return EXIT_VERIFY
        print("PASS composition identity")
    return EXIT_OK


def cmd_family(args) -> int:
    g = make_family(args.name, args.n)
    prof = independence_profile(g)
    want = family_profile(args.name, args.n)
    print(f"{args.name.upper()}({args.n}): {g.n} vertices, profile {' '.join(map(str, prof.coeffs))}")
    if args.emit_graph:
        with open(args.emit_graph, "w") as fh:
            fh.write(g.to_text())
    if prof.coeffs != want:
        print(f"FAIL expected profile {want}")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cat = enumerate_realizable_triples(args.n, include_n8=args.n8, threads=args.threads)
    rows = cat.rows()
    if args.out:
        write_catalog_csv(rows, args.out)
        print(f"{len(rows)} triples written to {args.out}")
    else:
        print("n,a2,a3,labeled_count")
        for r in rows:
            print(",".join(map(str, r)))
    return EXIT_OK


def cmd_witness(args) -> int:
    g = find_witness(args.a1, args.a2, args.a3)
    if g is None:
        print(f"no graph on {args.a1} vertices has profile ({args.a1}, {args.a2}, {args.a3})")
    else:
        sys.stdout.write(g.to_text())
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    ids = [args.table] if args.table else sorted(TABLES)
    failed = 0
    for k in ids:
        for row in verify_table(k):
            bad = [c for c in row if not c.ok]
            failed += bool(bad)
            cells = "  ".join(f"{c.name}={_cx(c.computed)}" for c in row)
            print(f"{'FAIL' if bad else 'PASS'} table {k} {row[0].cubic.coeffs}: {cells}")
            for c in bad:
                print(f"    {c.name}: expected {_cx(c.expected)}, error {c.error:.3g} > {c.tol:g}")
    return EXIT_VERIFY if failed else EXIT_OK


# -- parser --------------------------------------------------------------------

def _add_triple(p, optional=False):
    kw = {"nargs": "?"} if optional else {}
    for name in ("a1", "a2", "a3"):
        p.add_argument(name, type=int, **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indy3", description="Independence attractors of graphs with independence number 3.")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes for enumeration (default: $INDY3_THREADS or 1)")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("classify", help="classify the attractor for a triple or a graph file")
    _add_triple(p, optional=True)
    p.add_argument("--graph")
    p.add_argument("--json")
    p.add_argument("--max-iter", type=int, default=1000)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("attract", help="approximate the attractor by backward orbits of -1")
    _add_triple(p)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_attract)

    p = sub.add_parser("julia", help="sample the Julia set by inverse iteration")
    _add_triple(p)
    p.add_argument("--iters", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_julia)

    p = sub.add_parser("render", help="escape-time image as binary PGM")
    _add_triple(p)
    p.add_argument("--window", type=float, nargs=4, metavar=("CX", "CY", "W", "H"))
    p.add_argument("--size", type=_size, default=(400, 400))
    p.add_argument("--max-iter", type=int, default=200)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("hausdorff", help="Hausdorff distance between two point CSVs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_hausdorff)

    p = sub.add_parser("diameter", help="diameter of a point CSV")
    p.add_argument("file")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("product", help="profile of G x G")
    p.add_argument("--graph", required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("family", help="build a G1/G2/G3 family member")
    p.add_argument("name", type=str.upper, choices=["G1", "G2", "G3"])
    p.add_argument("n", type=int)
    p.add_argument("--emit-graph")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="all (a2, a3) on n labeled vertices")
    p.add_argument("n", type=int)
    p.add_argument("--n8", action="store_true", help="allow n = 8 (2^28 graphs)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("witness", help="find a graph with the given profile (a1 <= 8)")
    _add_triple(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify-tables", help="recompute the reference critical-orbit tables")
    p.add_argument("--table", type=int, choices=sorted(TABLES))
    p.set_defaults(func=cmd_verify_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads is None and os.environ.get("INDY3_THREADS"):
        args.threads = int(os.environ["INDY3_THREADS"])
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ValueError, OSError) as exc:
        print(f"indy3 {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
