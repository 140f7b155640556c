#!/usr/bin/env python3
"""Exhaustive maxima for every n under the feasibility ceiling.

Compares each value with the recorded table and the closed-form bound and
writes a JSON summary.

    python scripts/reproduce_exact_values.py
    python scripts/reproduce_exact_values.py --affine-max 7 --projective-max 8 --workers 4
"""
import argparse
import json
import sys
import time
from pathlib import Path

from pseudolines.bounds import bound, known_exact
from pseudolines.search import SearchConfig, max_triangles_exact


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--affine-max", type=int, default=8)
    ap.add_argument("--projective-max", type=int, default=9)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", default="results/exact_values.json")
    args = ap.parse_args()

    rows = []
    jobs = [("affine", n) for n in range(3, args.affine_max + 1)]
    jobs += [("projective", n) for n in range(4, args.projective_max + 1)]
    print(f"{'mode':<10} {'n':>3} {'max':>5} {'bound':>6} {'known':>6} {'visited':>9} {'sec':>8}")
    ok = True
    for mode, n in jobs:
        t0 = time.perf_counter()
        rec = max_triangles_exact(SearchConfig(n, mode, workers=args.workers))
        dt = time.perf_counter() - t0
        b = bound(n, mode).value
        kv = known_exact(n, mode).exact_max
        ok &= rec.max_triangles == kv
        rows.append({"mode": mode, "n": n, "max": rec.max_triangles, "bound": b, "known": kv,
                     "visited": rec.visited, "seconds": round(dt, 3),
                     "witness": list(rec.witness)})
        flag = "" if rec.max_triangles == kv else "  MISMATCH"
        print(f"{mode:<10} {n:>3} {rec.max_triangles:>5} {b:>6} {kv:>6} {rec.visited:>9} "
              f"{dt:>8.2f}{flag}", flush=True)
    out = Path(args.json)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(rows, indent=2) + "\n")
    print(f"wrote {out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
