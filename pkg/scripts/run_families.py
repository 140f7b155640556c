#!/usr/bin/env python3
"""Build every doubling family the available seeds allow.

For each row m of the attainment table and each offset, doubles up to
``--max-n`` lines and reports which n were reached and how long it took.
Rows whose seed is missing are listed as such.

    python scripts/run_families.py --max-n 200
"""
import argparse
import sys
import time

from pseudolines.bounds import FAMILY_ROWS
from pseudolines.constructions import family
from pseudolines.errors import ConstructionError
from pseudolines.faces import count_triangles


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=100)
    args = ap.parse_args()
    failures = 0
    for m, offsets in FAMILY_ROWS.items():
        for off in offsets:
            reached = []
            t = 0
            t0 = time.perf_counter()
            note = ""
            while m * 2 ** t + off <= args.max_n:
                try:
                    res = family(m, t, off)
                except ConstructionError as e:
                    note = f"stopped: {e}"
                    if reached:
                        failures += 1
                    break
                reached.append(f"{res.n}:{count_triangles(res.affine)}/{count_triangles(res.projective)}")
                t += 1
            dt = time.perf_counter() - t0
            print(f"m={m:>2} offset={off}: {' '.join(reached) or '-'} ({dt:.1f}s) {note}",
                  flush=True)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
