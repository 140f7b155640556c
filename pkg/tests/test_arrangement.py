from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from pseudolines.arrangement import (
    AffineArrangement,
    Chirotope,
    ProjectiveArrangement,
    all_reduced_words,
    canonical_key,
    local_sequences,
    normal_form,
    projective_closure,
    projectivize,
    reflect_horizontal,
    reflect_vertical,
    reroot,
    rerooted,
    rotate,
    triangle3,
    validate,
)
from pseudolines.errors import (
    NTooSmall,
    PairCrossesTwice,
    PositionOutOfRange,
    UnknownLine,
    WrongLength,
)
from pseudolines.faces import count_triangles, count_triangles_affine

from conftest import arrangements


def test_validate_accepts_triangle():
    assert validate(3, [1, 2, 1]).word == (1, 2, 1)


@pytest.mark.parametrize("n,word,exc", [
    (3, [1, 2], WrongLength),
    (3, [1, 3, 1], PositionOutOfRange),
    (3, [0, 1, 2], PositionOutOfRange),
    (1, [], NTooSmall),
])
def test_validate_rejects(n, word, exc):
    with pytest.raises(exc):
        validate(n, word)


def test_pair_crossing_twice_reports_index():
    with pytest.raises(PairCrossesTwice) as e:
        validate(3, [1, 1, 2])
    assert e.value.index == 1
    assert e.value.pair == (0, 1)


def test_commuting_words_are_equal():
    a = AffineArrangement([1, 3, 2, 1, 3, 2], 4)
    b = AffineArrangement([3, 1, 2, 3, 1, 2], 4)
    assert a == b and hash(a) == hash(b)
    assert a != AffineArrangement([1, 2, 1, 3, 2, 1], 4)


@given(arrangements(3, 8))
def test_normal_form_is_fixed_point(A):
    nf = normal_form(A.n, A.word)
    assert normal_form(A.n, nf) == nf
    assert local_sequences(A.n, nf) == local_sequences(A.n, A.word)


@pytest.mark.parametrize("n,expected", [(3, 2), (4, 8), (5, 62)])
def test_commutation_class_counts(n, expected):
    # brute force over every reduced word of the reverse permutation
    classes = {normal_form(n, w) for w in all_reduced_words(n)}
    assert len(classes) == expected


def test_triangle3():
    A = triangle3()
    assert A.n == 3 and count_triangles_affine(A) == 1


@given(arrangements(3, 7))
def test_reflections_keep_triangles(A):
    t = count_triangles_affine(A)
    assert count_triangles_affine(reflect_horizontal(A)) == t
    assert count_triangles_affine(reflect_vertical(A)) == t
    assert canonical_key(reflect_vertical(A)) == canonical_key(A)


@given(arrangements(3, 7))
def test_rotation_preserves_projective_closure_class(A):
    B, _ = rotate(A)
    assert canonical_key(projective_closure(B)) == canonical_key(projective_closure(A))


def _same_up_to_reorientation(c1, c2, n):
    # brute force over sign vectors; a global sign flip is a mirror view of the same chart
    for s in product((1, -1), repeat=n):
        if all(c2(a, b, c) == s[a] * s[b] * s[c] * c1(a, b, c)
               for a, b, c in combinations(range(n), 3)):
            return True
    return False


@given(arrangements(3, 5))
@settings(max_examples=30)
def test_reroot_keeps_chirotope(A):
    P = projectivize(A)
    base = Chirotope.of(P)
    for x in P.lines:
        Q = rerooted(P, x)
        assert _same_up_to_reorientation(base, Chirotope.of(Q), P.n)
        back = rerooted(Q, P.infinity_label)
        assert _same_up_to_reorientation(base, Chirotope.of(back), P.n)


@given(arrangements(3, 7))
def test_reroot_at_current_infinity_is_identity(A):
    P = projectivize(A)
    Q = rerooted(P, P.infinity_label)
    assert Q.affine_part == P.affine_part and Q.wire_labels == P.wire_labels


@given(arrangements(3, 6))
@settings(max_examples=40)
def test_reroot_keeps_projective_triangles(A):
    P = projectivize(A)
    t = count_triangles(P)
    for x in P.lines:
        assert count_triangles(rerooted(P, x)) == t


def test_reroot_unknown_line():
    with pytest.raises(UnknownLine):
        reroot(projectivize(triangle3()), 7)


def test_chirotope_is_alternating():
    P = projectivize(AffineArrangement([1, 2, 1, 3, 2, 1], 4))
    chi = Chirotope.of(P)
    for a in range(5):
        for b in range(5):
            for c in range(5):
                if len({a, b, c}) == 3:
                    assert chi(a, b, c) == -chi(b, a, c) == chi(b, c, a)


@pytest.mark.parametrize("n,expected", [(4, 1), (5, 1), (6, 4), (7, 11)])
def test_projective_class_counts(n, expected):
    keys = {canonical_key(projectivize(AffineArrangement(nf)))
            for nf in {normal_form(n - 1, w) for w in all_reduced_words(n - 1)}}
    assert len(keys) == expected


def test_projective_labels_must_be_consistent():
    with pytest.raises(Exception):
        ProjectiveArrangement(triangle3(), 1, (0, 1, 2))
