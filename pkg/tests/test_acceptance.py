"""Acceptance criteria, one test per criterion.

Every test records a PASS/FAIL line that ``conftest.py`` prints in the
terminal summary.  Run on its own with ``pytest tests/test_acceptance.py``.
Time limits below are the pinned tolerances; all counts are exact integers.
"""
import functools
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from pseudolines.arrangement import AffineArrangement, projectivize, rerooted
from pseudolines.bounds import affine_bound, bound, known_exact, projective_bound
from pseudolines.constructions import family
from pseudolines.faces import (
    build_faces,
    build_projective_faces,
    count_triangles,
    has_unused_near_every_line,
    unused_per_line,
)
from pseudolines.naive import trace_faces
from pseudolines.search import (
    SearchConfig,
    enumerate_classes,
    heuristic_search,
    max_triangles_exact,
    random_arrangement,
)

BOUND_TABLE_SECONDS = 1.0
KNOWN_TABLE_SECONDS = 1.0
FAMILY_SECONDS = 10.0
RANDOM_SAMPLES = 10_000

RESULTS: dict = {}


def criterion(num, title, gated=True):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            try:
                detail = fn(*a, **kw)
            except BaseException as e:
                RESULTS[num] = ("FAIL" if gated else "INFO", title, f"{type(e).__name__}: {e}")
                raise
            RESULTS[num] = ("PASS" if gated else "INFO", title, detail or "")
        return run
    return wrap


def _words(cfg):
    out = []
    enumerate_classes(cfg, lambda w, t: out.append((w, t)))
    return out


# independent rational evaluation of the bound formulas
def _affine_oracle(n):
    r = n % 6
    if r in (0, 4):
        v = Fraction(n) * (n - Fraction(5, 2)) / 3
    elif r == 1:
        v = Fraction(n * (n - 2) - 2, 3)
    elif r == 2:
        v = (Fraction(n) * (n - Fraction(5, 2)) - 2) / 3
    else:
        v = Fraction(n * (n - 2), 3)
    assert v.denominator == 1
    return int(v)


def _projective_oracle(n):
    r = n % 6
    if r in (0, 4):
        v = Fraction(n * (n - 1), 3)
    elif r == 1:
        v = Fraction(n * (n - 2) - 2, 3)
    elif r == 2:
        v = Fraction(n * (n - 1) - 5, 3)
    else:
        v = Fraction(n * (n - 2), 3)
    assert v.denominator == 1
    return int(v)


@criterion(1, "bound formulas n=3..10^4, exact integers, < 1 s")
def test_bound_tables():
    t0 = time.perf_counter()
    aff = [affine_bound(n).value for n in range(3, 10_001)]
    proj = [projective_bound(n).value for n in range(4, 10_001)]
    elapsed = time.perf_counter() - t0
    assert all(type(v) is int for v in aff + proj)
    assert aff == [_affine_oracle(n) for n in range(3, 10_001)]
    assert proj == [_projective_oracle(n) for n in range(4, 10_001)]
    assert (affine_bound(3).value, affine_bound(26).value) == (1, 203)
    assert (projective_bound(4).value, projective_bound(26).value) == (4, 215)
    assert elapsed < BOUND_TABLE_SECONDS
    return f"{len(aff) + len(proj)} values in {elapsed:.3f}s"


@criterion(2, "known maxima with exceptions, < 1 s")
def test_known_values():
    t0 = time.perf_counter()
    proj = {n: known_exact(n, "projective") for n in range(4, 31)}
    aff = {n: known_exact(n, "affine") for n in range(3, 31)}
    elapsed = time.perf_counter() - t0
    below_p = {n: kv.exact_max for n, kv in proj.items() if not kv.reaches_bound}
    below_a = {n: kv.exact_max for n, kv in aff.items() if not kv.reaches_bound}
    assert below_p == {8: 16, 11: 32, 12: 40, 14: 58, 20: 124}
    assert below_a == {11: 32, 12: 37}
    assert elapsed < KNOWN_TABLE_SECONDS
    return f"{elapsed:.4f}s"


@criterion(3, "exhaustive maxima affine n=3..6, projective n=4..8")
def test_exact_search():
    aff = [max_triangles_exact(SearchConfig(n)).max_triangles for n in range(3, 7)]
    proj = [max_triangles_exact(SearchConfig(n, "projective")).max_triangles for n in range(4, 9)]
    assert aff == [1, 2, 5, 7]
    assert proj == [4, 5, 10, 11, 16]
    assert proj[-1] < projective_bound(8).value
    return f"affine {aff}, projective {proj}"


@criterion(4, "doubling chains for m=4 through n=34 at the bounds, < 10 s")
def test_doubling_chain():
    t0 = time.perf_counter()
    reached = []
    for t in range(4):
        for offset in (1, 2):
            res = family(4, t, offset)
            n = res.n
            assert count_triangles(res.affine) == affine_bound(n).value
            assert count_triangles(res.projective) == projective_bound(n).value
            for st in res.stages:
                if st.delta is None:
                    continue
                k = st.n // 2 + 1  # input size: 2k - 1 wires affine, 2k - 2 lines projective
                want = (k - 1) ** 2 if st.mode == "affine" else (k - 1) * (k - 2)
                assert st.delta == st.expected_delta == want
                assert st.unused_after == st.unused_before
            reached.append(n)
    elapsed = time.perf_counter() - t0
    assert sorted(reached) == [5, 6, 9, 10, 17, 18, 33, 34]
    assert elapsed < FAMILY_SECONDS
    return f"n={sorted(reached)} in {elapsed:.2f}s"


@criterion(5, "structural properties (counts, unused segments, rerooting)")
def test_property_suites():
    # face and segment counts on every enumerated arrangement
    for n in range(3, 8):
        for w, _ in _words(SearchConfig(n, beyond_ceiling=True)):
            build_faces(AffineArrangement(w))  # raises on any formula mismatch
    # unused bounded segment of another line ending on each line, even affine n
    for n in (4, 6):
        assert all(has_unused_near_every_line(AffineArrangement(w))
                   for w, _ in _words(SearchConfig(n)))
    rng = random.Random(2024)
    for n in (8, 10):
        for _ in range(RANDOM_SAMPLES):
            assert has_unused_near_every_line(random_arrangement(n, rng))
    # every line carries an unused segment, odd projective n
    for n in (5, 7):
        for w, _ in _words(SearchConfig(n, "projective")):
            per = unused_per_line(build_projective_faces(projectivize(AffineArrangement(w))))
            assert all(per[line] >= 1 for line in range(n))
    # at least five unused segments, projective n = 8
    worst = min(sum(not u for u in build_projective_faces(projectivize(AffineArrangement(w))).used)
                for w, _ in _words(SearchConfig(8, "projective")))
    assert worst >= 5
    # projective triangle count does not depend on the line at infinity
    charts = 0
    for n in range(4, 8):
        for w, t in _words(SearchConfig(n, "projective")):
            P = projectivize(AffineArrangement(w))
            for x in P.lines:
                assert count_triangles(rerooted(P, x)) == t
                charts += 1
    return f"min unused at projective n=8: {worst}; {charts} charts checked"


@criterion(6, "naive face tracer equals sweep for every arrangement n<=6")
def test_naive_oracle():
    total = 0
    for n in range(3, 7):
        for w, _ in _words(SearchConfig(n)):
            fs = build_faces(AffineArrangement(w))
            mine = Counter((frozenset((s // n, s % n) for s in f.edges), f.bounded)
                           for f in fs.faces)
            assert mine == Counter(trace_faces(n, w))
            total += 1
    return f"{total} arrangements"


@criterion(7, "parallel and sequential exhaustive search agree at projective n=7")
def test_parallel_equals_sequential():
    seq = max_triangles_exact(SearchConfig(7, "projective"))
    par = max_triangles_exact(SearchConfig(7, "projective", workers=4))
    assert seq.same_result(par)
    assert seq.max_triangles == 11
    return f"max {seq.max_triangles}, witness {' '.join(map(str, seq.witness))}"


@criterion(8, "stretch: larger instances (informational, not gated)", gated=False)
def test_stretch():
    notes = []
    rec = heuristic_search(SearchConfig(9, kind="heuristic", rng_seed=0))
    notes.append(f"heuristic affine n=9: {rec.max_triangles} (known {known_exact(9, 'affine').exact_max})")
    try:
        family(26, 0, 1)
    except Exception as e:
        notes.append(f"26/27-line family: {type(e).__name__}")
    notes.append("exact n=12,14,20: beyond the exhaustive ceiling, not attempted")
    return "; ".join(notes)
