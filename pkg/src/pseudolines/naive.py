"""Brute-force face builder used as an oracle for :mod:`pseudolines.faces`.

Draws the wiring diagram as an explicit planar straight-line graph inside a
bounding box, orders neighbours by angle and walks every face.  Nothing is
shared with the sweep in ``faces.py`` besides the crossing word itself.
"""
from __future__ import annotations

import math
from collections import defaultdict

INF = ("inf", -1)


def trace_faces(n: int, word) -> list[tuple[frozenset, bool]]:
    """Return ``(edge labels, bounded)`` for every region of the arrangement.

    Edge labels are ``(wire, k)`` with ``k`` the number of crossings the wire
    passed before that segment.
    """
    N = len(word)
    coords = {}
    adj = defaultdict(set)
    label = {}

    def node(key, xy):
        coords[key] = xy
        return key

    def edge(u, v, lab):
        adj[u].add(v)
        adj[v].add(u)
        label[frozenset((u, v))] = lab

    perm = list(range(n))
    passed = [0] * n
    for t in range(n):
        node(("b", 0, t), (0.0, float(t)))
    for c, p in enumerate(word):
        x0, x1 = 2.0 * c, 2.0 * c + 2
        for t in range(n):
            node(("b", c + 1, t), (x1, float(t)))
        X = node(("x", c), (x0 + 1, p - 0.5))
        for t in range(n):
            w = perm[t]
            if t == p - 1:
                edge(("b", c, t), X, (w, passed[w]))
                edge(X, ("b", c + 1, p), (w, passed[w] + 1))
            elif t == p:
                edge(("b", c, t), X, (w, passed[w]))
                edge(X, ("b", c + 1, p - 1), (w, passed[w] + 1))
            else:
                edge(("b", c, t), ("b", c + 1, t), (w, passed[w]))
        a, b = perm[p - 1], perm[p]
        passed[a] += 1
        passed[b] += 1
        perm[p - 1], perm[p] = b, a
    # bounding box
    W = 2.0 * N
    corners = [node(("c", i), xy) for i, xy in enumerate([(0, -1), (0, n), (W, n), (W, -1)])]
    left = [corners[0]] + [("b", 0, t) for t in range(n)] + [corners[1]]
    right = [corners[3]] + [("b", N, t) for t in range(n)] + [corners[2]]
    for chain in (left, right):
        for u, v in zip(chain, chain[1:]):
            edge(u, v, INF)
    edge(corners[1], corners[2], INF)
    edge(corners[0], corners[3], INF)

    # neighbours in counter-clockwise order
    order = {}
    for v, nbrs in adj.items():
        vx, vy = coords[v]
        order[v] = sorted(nbrs, key=lambda u: math.atan2(coords[u][1] - vy, coords[u][0] - vx))
    seen = set()
    faces = []
    for u in adj:
        for v in adj[u]:
            if (u, v) in seen:
                continue
            cyc = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                cyc.append((a, b))
                ring = order[b]
                i = ring.index(a)
                a, b = b, ring[i - 1]  # keep the face on the left
            area = sum(coords[p][0] * coords[q][1] - coords[q][0] * coords[p][1] for p, q in cyc)
            if area < 0:
                continue  # outside of the bounding box
            labs = [label[frozenset(e)] for e in cyc]
            segs = frozenset(l for l in labs if l != INF)
            faces.append((segs, INF not in labs))
    return faces
