"""Command line interface.

Exit codes: 0 success or claim verified, 1 claim refuted or construction
failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .arrangement import AffineArrangement, ProjectiveArrangement
from .arrfile import emit_arr, read_arr, write_arr
from .bounds import AFFINE, MODES, PROJECTIVE, bound, known_exact
from .constructions import (
    DoublingPlan,
    add_far_line,
    best_far_line,
    double_with_report,
    family,
    find_designated_line,
)
from .errors import ArrangementError, ConstructionError, FeasibilityCeilingExceeded, UnknownSeed
from .faces import count_triangles
from .render import RenderOptions, render_svg
from .search import SearchConfig, heuristic_search, max_triangles_exact, verify_claim
from .tables import (
    bounds_rows,
    format_bounds,
    format_known,
    stats_dict,
    stats_text,
    table_thm13,
    to_json,
)

OK, REFUTED, USAGE = 0, 1, 2


def _mode(arr) -> str:
    return PROJECTIVE if isinstance(arr, ProjectiveArrangement) else AFFINE


def _emit(args, arr, comments=None):
    if args.out:
        write_arr(args.out, arr, comments)
    else:
        sys.stdout.write(emit_arr(arr, comments))


def cmd_bounds(args) -> int:
    modes = MODES if args.mode == "both" else (args.mode,)
    rows = []
    for mode in modes:
        lo = max(args.lo, 3 if mode == AFFINE else 4)
        rows.extend(bounds_rows(mode, lo, args.hi))
    if args.json:
        sys.stdout.write(to_json(rows))
    else:
        for mode in modes:
            print(f"# {mode}")
            sys.stdout.write(format_bounds([r for r in rows if r["mode"] == mode]))
    return OK


def cmd_count(args) -> int:
    arr = read_arr(args.file)
    sys.stdout.write(to_json(stats_dict(arr)) if args.json else stats_text(arr))
    return OK


def cmd_verify(args) -> int:
    if args.file:
        arr = read_arr(args.file)
        mode = _mode(arr)
        got = count_triangles(arr)
        claim = args.claim if args.claim is not None else bound(arr.n, mode).value
        ok = got >= claim
        report = {"mode": mode, "n": arr.n, "triangles": got, "claim": claim, "verified": ok}
    else:
        if args.n is None:
            print("verify needs a file or --n", file=sys.stderr)
            return USAGE
        rep = verify_claim(args.n, args.mode, workers=args.workers,
                           beyond_ceiling=args.beyond_ceiling)
        ok = rep.reached
        report = {
            "mode": rep.mode, "n": rep.n, "exhaustive_max": rep.found, "bound": rep.bound,
            "reached": rep.reached, "gap": rep.gap, "known": rep.known,
            "agrees_with_known": rep.agrees_with_known, "visited": rep.record.visited,
        }
    if args.json:
        sys.stdout.write(to_json(report))
    else:
        for k, v in report.items():
            print(f"{k}={v}")
    return OK if ok else REFUTED


def cmd_family(args) -> int:
    res = family(args.m, args.t, args.offset)
    for st in res.stages:
        print(f"stage {st.stage}: {st.operation} -> {st.mode} n={st.n} triangles={st.triangles} "
              f"bound={st.bound}", file=sys.stderr)
    arr = res.projective if args.mode == PROJECTIVE else res.affine
    _emit(args, arr, {"triangles": count_triangles(arr), "provenance": "family",
                      "m": args.m, "t": args.t, "offset": args.offset})
    return OK


def cmd_double(args) -> int:
    arr = read_arr(args.file)
    d = args.line if args.line is not None else find_designated_line(arr)
    if d is None:
        print("no line satisfies the doubling hypothesis", file=sys.stderr)
        return REFUTED
    res = double_with_report(DoublingPlan(arr, d))
    print(f"delta={res.delta} expected={res.expected_delta} "
          f"unused_before={res.unused_before} unused_after={res.unused_after}", file=sys.stderr)
    _emit(args, res.output, {"triangles": count_triangles(res.output)})
    return OK


def cmd_far_line(args) -> int:
    arr = read_arr(args.file)
    if not isinstance(arr, AffineArrangement):
        print("far-line needs an affine arrangement", file=sys.stderr)
        return USAGE
    out = best_far_line(arr) if args.side is None else add_far_line(arr, args.side)
    _emit(args, out, {"triangles": count_triangles(out)})
    return OK


def cmd_search(args) -> int:
    cfg = SearchConfig(args.n, args.mode, kind="heuristic" if args.heuristic else "exact",
                       workers=args.workers, budget=args.budget, rng_seed=args.seed,
                       restarts=args.restarts, time_limit=args.time_limit,
                       beyond_ceiling=args.beyond_ceiling)
    rec = heuristic_search(cfg) if args.heuristic else max_triangles_exact(cfg)
    print(f"n={rec.n} mode={rec.mode} max={rec.max_triangles} visited={rec.visited} "
          f"status={rec.proof_status}", file=sys.stderr)
    if rec.witness is None:
        return REFUTED
    _emit(args, rec.arrangement(), {"count": rec.max_triangles,
                                    "proof_status": rec.proof_status,
                                    "visited": rec.visited})
    return OK


def cmd_render(args) -> int:
    arr = read_arr(args.file)
    opts = RenderOptions(args.width, args.height, not args.no_shade, not args.no_unused,
                         not args.no_labels)
    svg = render_svg(arr, opts)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return OK


def cmd_table(args) -> int:
    rows = table_thm13()
    sys.stdout.write(to_json(rows) if args.json else format_known(rows))
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pseudolines",
                                 description="Triangles in arrangements of pseudo-lines")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="closed-form bound table")
    p.add_argument("--mode", choices=MODES + ("both",), default="both")
    p.add_argument("--from", dest="lo", type=int, default=3)
    p.add_argument("--to", dest="hi", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("count", help="face statistics of an .arr file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check a file against a claim, or search exhaustively")
    p.add_argument("file", nargs="?")
    p.add_argument("--claim", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--mode", choices=MODES, default=AFFINE)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--beyond-ceiling", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="build n = m 2^t + offset by doubling")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--offset", type=int, choices=(1, 2), default=1)
    p.add_argument("--mode", choices=MODES, default=AFFINE)
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("double", help="double one line of an arrangement")
    p.add_argument("file")
    p.add_argument("--line", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("far-line", help="add a line beyond all crossings")
    p.add_argument("file")
    p.add_argument("--side", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_far_line)

    p = sub.add_parser("search", help="exact or heuristic maximum search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=MODES, default=AFFINE)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true")
    g.add_argument("--heuristic", action="store_true")
    p.add_argument("--budget", type=int)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--beyond-ceiling", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="SVG drawing of an .arr file")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--width", type=int, default=640)
    p.add_argument("--height", type=int, default=360)
    p.add_argument("--no-shade", action="store_true")
    p.add_argument("--no-unused", action="store_true")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("table", help="known maxima for n <= 30 with witnesses")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ArrangementError, FeasibilityCeilingExceeded, UnknownSeed, OSError,
            ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except ConstructionError as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return REFUTED


if __name__ == "__main__":
    sys.exit(main())
