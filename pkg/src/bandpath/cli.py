"""Command line front end.

    bandpath invariant 3_1
    bandpath distance bound 3_1 3_1!
    bandpath pathway 0_1 6_2
    bandpath table reproduce 2 --out csv
    bandpath bio min-events "4^2_1'" 5^2_1
    bandpath bio chirality 5^2_1 --known 6_2!
    bandpath bio orientation 0_1 2^2_1 4^2_1 6^2_1

Exit codes: 0 success, 1 no result (e.g. no pathway within the length
limit), 2 parse error, 3 unknown name, 4 truncated search.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__
from .atlas import CACHE_NAME, load_atlas
from .bio import INDEPENDENT, PROCESSIVE, RecombQuery, chirality_infer, min_events, orientation_infer
from .codec import parse_pd
from .errors import BandpathError
from .pathways import MAX_LEN, build_graph, decompose_bound, shortest_pathways
from .tables import COLUMNS, reproduce_table, rows_to_csv

SCHEMA = "bandpath/1"
EXIT_TRUNCATED = 4


def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(dict(schema=SCHEMA, **payload), indent=2, sort_keys=True))
    else:
        print(text)


def _atlas(args):
    cache = Path(args.cache) / CACHE_NAME if args.cache else None
    return load_atlas(args.atlas, cache_path=cache)


def _report_text(r) -> str:
    up = "-" if r.upper is None else str(r.upper)
    line = f"{r.pair[0]} -> {r.pair[1]}: lower {r.lower.value} ({r.lower.method}), upper {up}, {r.status}"
    if r.pathway is not None and r.pathway.length:
        line += f"\n  via {r.pathway.render()}"
    if r.intermediates:
        line += f"\n  same-size intermediates: {', '.join(r.intermediates)}"
    return line


# -- subcommands ---------------------------------------------------------------

def cmd_invariant(args) -> int:
    text = args.link
    if text.lstrip().startswith("PD"):
        from .invariants.bundle import BundleCache
        cache = BundleCache(Path(args.cache) / CACHE_NAME if args.cache else None)
        b = cache.get(parse_pd(text))
        cache.save()
        label = "diagram"
    else:
        atlas = _atlas(args)
        label = atlas.canonical(text)
        b = atlas.bundle(label)
    pretty = b.pretty()
    _emit(args, {"link": label, "invariants": b.to_json()},
          "\n".join([label] + [f"  {k:<12} {v}" for k, v in pretty.items()]))
    return 0


def cmd_distance(args) -> int:
    atlas = _atlas(args)
    r = decompose_bound(args.a, args.b, atlas, build_graph(atlas), max_len=args.max_len)
    _emit(args, r.to_json(), _report_text(r))
    return EXIT_TRUNCATED if r.truncated else 0


def cmd_pathway(args) -> int:
    atlas = _atlas(args)
    ps = shortest_pathways(build_graph(atlas), args.a, args.b, max_len=args.max_len,
                           max_components=args.max_components,
                           mcn_decreasing=args.mcn_decreasing, cap=args.cap)
    lines = [f"{len(ps)} minimal pathway(s) of length {ps[0].length}"]
    lines += [f"  {p.render()}" for p in ps]
    if ps.truncated:
        lines.append(f"  (truncated at {args.cap})")
    _emit(args, {"length": ps[0].length, "truncated": ps.truncated,
                 "pathways": [p.to_json() for p in ps]}, "\n".join(lines))
    return EXIT_TRUNCATED if ps.truncated else 0


def cmd_table(args) -> int:
    atlas = _atlas(args)
    rows = reproduce_table(atlas, args.which)
    if args.out == "csv":
        sys.stdout.write(rows_to_csv(rows))
        return 0
    if args.json:
        _emit(args, {"table": args.which, "columns": COLUMNS,
                     "rows": [r.as_dict() for r in rows]}, "")
        return 0
    for r in rows:
        d = r.as_dict()
        print(f"{d['row']:>14} {d['col']:<14} expected {d['expected']:<4} lower {d['lower']:<2} "
              f"{d['method']:<20} upper {str(d['upper']):<3} {d['status']}")
    good = sum(r.sound for r in rows)
    print(f"{len(rows)} entries, {sum(r.matches for r in rows)} exact, {good} sound")
    return 0


def cmd_bio(args) -> int:
    atlas = _atlas(args)
    g = build_graph(atlas)
    if args.bio == "min-events":
        q = RecombQuery(args.substrate, tuple(args.products),
                        PROCESSIVE if args.processive else INDEPENDENT)
        reps = min_events(q, atlas, g)
        _emit(args, {"mode": q.mode, "reports": [r.to_json() for r in reps]},
              "\n".join(_report_text(r) for r in reps))
        return EXIT_TRUNCATED if any(r.truncated for r in reps) else 0
    if args.bio == "chirality":
        rep = chirality_infer(args.known, args.unknown, atlas, g)
        lines = [f"verdict: {rep.name if rep.name else rep.verdict}"]
        for c, reps in rep.candidates.items():
            lines += [f"  {c}: " + _report_text(r).replace("\n", "\n    ") for r in reps]
        _emit(args, rep.to_json(), "\n".join(lines))
        return 0
    rep = orientation_infer(args.substrate, args.products, atlas, g)
    lines = []
    for m in sorted({e.m for e in rep.entries}):
        lines.append(f"m={m}: {rep.verdict(m)}")
        for e in rep.entries:
            if e.m == m:
                step = {True: "one surgery", False: "excluded", None: "unknown"}[e.one_step]
                tab = "" if e.table is None else f" (table: {e.table})"
                lines.append(f"  {e.candidate:<8} {e.tag:<13} {step}{tab}")
    _emit(args, rep.to_json(), "\n".join(lines))
    return 0


# -- parser --------------------------------------------------------------------

def _max_len(text: str) -> int:
    n = int(text)
    if not 0 <= n <= MAX_LEN:
        raise argparse.ArgumentTypeError(f"must be between 0 and {MAX_LEN}")
    return n


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; SUPPRESS
    # keeps a subparser from resetting a value given earlier
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--atlas", default=argparse.SUPPRESS,
                        help="atlas directory (default: the shipped atlas)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--cache", default=argparse.SUPPRESS, help="directory for the invariant cache")

    p = argparse.ArgumentParser(prog="bandpath", parents=[common],
                                description="Coherent band surgery distances between knots and links.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariant", parents=[common], help="invariants of a named link or PD code")
    s.add_argument("link", help="atlas name (e.g. 3_1, 2^2_1') or PD[...] code")
    s.set_defaults(func=cmd_invariant)

    s = sub.add_parser("distance", parents=[common], help="distance bounds between two links")
    dsub = s.add_subparsers(dest="distance_cmd", required=True)
    d = dsub.add_parser("bound", parents=[common], help="lower and certified upper bound")
    d.add_argument("a")
    d.add_argument("b")
    d.add_argument("--max-len", type=_max_len, default=12)
    d.set_defaults(func=cmd_distance)

    s = sub.add_parser("pathway", parents=[common], help="all minimal certified pathways")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-len", type=_max_len, default=12)
    s.add_argument("--max-components", type=int)
    s.add_argument("--mcn-decreasing", action="store_true",
                   help="never step to a link with larger crossing number")
    s.add_argument("--cap", type=int, default=10 ** 5, help="maximum number of pathways listed")
    s.set_defaults(func=cmd_pathway)

    s = sub.add_parser("table", parents=[common], help="distance tables")
    tsub = s.add_subparsers(dest="table_cmd", required=True)
    t = tsub.add_parser("reproduce", parents=[common], help="recompute a table")
    t.add_argument("which", type=int, choices=(1, 2, 3))
    t.add_argument("--out", choices=("text", "csv"), default="text")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("bio", parents=[common], help="site-specific recombination queries")
    bsub = s.add_subparsers(dest="bio", required=True)
    b = bsub.add_parser("min-events", parents=[common], help="minimal number of recombination events")
    b.add_argument("substrate")
    b.add_argument("products", nargs="+")
    b.add_argument("--processive", action="store_true",
                   help="products form a chain; also compare its ends")
    b.set_defaults(func=cmd_bio)
    b = bsub.add_parser("chirality", parents=[common], help="which mirror image a product must be")
    b.add_argument("unknown", help="product whose mirror image is in question")
    b.add_argument("--known", nargs="+", required=True, help="products of known chirality")
    b.set_defaults(func=cmd_bio)
    b = bsub.add_parser("orientation", parents=[common], help="parallel or antiparallel torus links")
    b.add_argument("substrate")
    b.add_argument("products", nargs="+", help="(2,2m) torus link names such as 4^2_1")
    b.set_defaults(func=cmd_bio)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in (("atlas", None), ("json", False), ("cache", None)):
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        return args.func(args)
    except BandpathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        # output piped into head and the like; stay quiet
        sys.stdout = open(os.devnull, "w")
        return 0


if __name__ == "__main__":
    sys.exit(main())
