import json
import pytest
from hypothesis import given, settings

from pseudolines.arrangement import AffineArrangement, projectivize, rotate, triangle3
from pseudolines.arrfile import write_arr
from pseudolines.bounds import affine_bound, projective_bound
from pseudolines.constructions import (
    DoublingPlan,
    add_far_line,
    available_seeds,
    best_far_line,
    check_plan,
    double,
    double_with_report,
    family,
    find_designated_line,
    seed,
    store_seed,
)
from pseudolines.errors import (
    HypothesisNotMet,
    PositionOutOfRange,
    SeedFailsBound,
    SeedUnavailable,
    UnknownSeed,
)
from pseudolines.faces import build_faces, count_triangles, count_triangles_affine

from conftest import arrangements


def test_double_triangle():
    A = triangle3()
    res = double_with_report(DoublingPlan(A, find_designated_line(A)))
    assert res.output.n == 5
    assert res.delta == res.expected_delta == 4
    assert res.unused_before == res.unused_after == 0
    assert count_triangles(res.output) == 5


def test_double_projective_four():
    P = projectivize(triangle3())
    d = find_designated_line(P)
    res = double_with_report(DoublingPlan(P, d))
    assert res.output.n == 6
    assert count_triangles(res.output) == 10
    assert res.delta == 3 * 2


def test_plan_hypotheses():
    with pytest.raises(HypothesisNotMet):
        check_plan(DoublingPlan(AffineArrangement([1, 2, 1, 3, 2, 1], 4), 0))
    with pytest.raises(HypothesisNotMet):
        check_plan(DoublingPlan(projectivize(AffineArrangement([1, 2, 1, 3, 2, 1], 4)), 0))
    with pytest.raises(HypothesisNotMet):
        check_plan(DoublingPlan(triangle3(), 9))


def test_plan_line_with_wrong_touch_count():
    A = AffineArrangement([1, 2, 3, 4, 1, 2, 3, 1, 2, 1], 5)
    touch = {line: sum(1 for t in build_faces(A).triangles
                       if line in {s // 5 for s in build_faces(A).faces[t].edges})
             for line in range(5)}
    bad = [line for line, c in touch.items() if c != 3]
    assert bad
    with pytest.raises(HypothesisNotMet):
        check_plan(DoublingPlan(A, bad[0]))


def _side_wedges(A, side):
    """Wedges between consecutive left (or right) ends that the far line cuts off.

    The top and bottom faces are only split by rays of the new line, so
    they never give a bounded piece.
    """
    B = A
    for _ in range(side % A.n):
        B, _ = rotate(B)
    fs = build_faces(B)
    kind = "left" if side < A.n else "right"
    return sum(1 for f in fs.faces if f.kind == kind and f.size == 2)


@given(arrangements(3, 7))
@settings(max_examples=30)
def test_far_line_gain_equals_wedges_crossed(A):
    t = count_triangles_affine(A)
    for side in range(2 * A.n):
        B = add_far_line(A, side)
        assert B.n == A.n + 1
        assert count_triangles_affine(B) - t == _side_wedges(A, side)


def test_far_line_side_range():
    with pytest.raises(PositionOutOfRange):
        add_far_line(triangle3(), 6)


def test_best_far_line_after_doubling():
    A5 = double(DoublingPlan(triangle3(), 0))
    assert count_triangles_affine(best_far_line(A5)) == affine_bound(6).value


@pytest.mark.parametrize("t,offset,n", [(0, 1, 5), (1, 1, 9), (2, 1, 17), (0, 2, 6), (1, 2, 10)])
def test_family_of_four(t, offset, n):
    res = family(4, t, offset)
    assert res.n == n
    assert count_triangles(res.affine) == affine_bound(n).value
    assert count_triangles(res.projective) == projective_bound(n).value
    assert all(st.reaches_bound for st in res.stages)


@pytest.mark.parametrize("t,n,value", [(1, 13, 47), (2, 25, 191)])
def test_family_of_six_from_stored_seed(t, n, value):
    res = family(6, t, 1)
    assert count_triangles(res.affine) == value == affine_bound(n).value
    assert count_triangles(res.projective) == projective_bound(n).value


def test_family_without_seed():
    with pytest.raises(SeedUnavailable):
        family(14, 1, 1)


def test_builtin_seeds():
    assert seed("triangle3").provenance == "analytic"
    assert seed("projective4").arrangement.n == 4
    s7 = seed("affine/7")
    assert s7.provenance == "search-derived" and count_triangles(s7.arrangement) == 11
    assert ("affine", 7) in available_seeds()


def test_unknown_seed():
    with pytest.raises(UnknownSeed):
        seed("affine/99")
    with pytest.raises(UnknownSeed):
        seed("nonsense")


def test_store_and_reload_seed(seed_root):
    A5 = double(DoublingPlan(triangle3(), 0))
    p = store_seed(A5, "search-derived", seed_root, note="test")
    assert json.loads(p.with_suffix(".json").read_text())["provenance"] == "search-derived"
    assert seed("affine/5", seed_root).arrangement == A5


def test_seed_failing_bound(seed_root):
    write_arr(seed_root / "affine" / "5.arr", AffineArrangement([1, 2, 3, 4, 1, 2, 3, 1, 2, 1], 5))
    with pytest.raises(SeedFailsBound):
        seed("affine/5", seed_root)
