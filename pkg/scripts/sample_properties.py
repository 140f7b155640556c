#!/usr/bin/env python3
"""Random sampling of structural properties at sizes too large to enumerate.

For each n draws random sweeps and checks: every line has an unused
bounded segment of another line ending on it (even n), and the projective
triangle count is the same in every chart.  Prints the triangle count
distribution as well.

    python scripts/sample_properties.py --n 8 10 12 --samples 2000
"""
import argparse
import random
import sys
from collections import Counter

from pseudolines.arrangement import projectivize, rerooted
from pseudolines.faces import count_triangles, count_triangles_affine, has_unused_near_every_line
from pseudolines.search import random_arrangement


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[8, 10])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--charts", action="store_true", help="also check every chart (slow)")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for n in args.n:
        dist = Counter()
        violations = 0
        for _ in range(args.samples):
            A = random_arrangement(n, rng)
            dist[count_triangles_affine(A)] += 1
            if n % 2 == 0 and not has_unused_near_every_line(A):
                violations += 1
            if args.charts:
                P = projectivize(A)
                t = count_triangles(P)
                if any(count_triangles(rerooted(P, x)) != t for x in P.lines):
                    violations += 1
        bad += violations
        hist = " ".join(f"{k}:{v}" for k, v in sorted(dist.items()))
        print(f"n={n}: violations={violations} triangles {hist}", flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
