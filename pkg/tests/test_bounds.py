import pytest
from hypothesis import given, strategies as st

from pseudolines.bounds import (
    EXCEPTIONS,
    affine_bound,
    bound,
    check_known,
    family_members,
    family_schedule,
    known_exact,
    projective_bound,
    rough_bound,
)
from pseudolines.errors import NTooSmall


@pytest.mark.parametrize("n,value", [(3, 1), (4, 2), (5, 5), (6, 7), (7, 11), (8, 14),
                                     (9, 21), (10, 25), (26, 203)])
def test_affine_spot_values(n, value):
    assert affine_bound(n).value == value


@pytest.mark.parametrize("n,value", [(4, 4), (5, 5), (6, 10), (7, 11), (8, 17), (9, 21),
                                     (10, 30), (26, 215)])
def test_projective_spot_values(n, value):
    assert projective_bound(n).value == value


@given(st.integers(3, 10_000))
def test_affine_bound_within_rough_bound(n):
    b = affine_bound(n).value
    assert isinstance(b, int)
    assert b <= rough_bound(n, "affine")


@given(st.integers(4, 10_000))
def test_projective_bound_within_rough_bound(n):
    b = projective_bound(n).value
    assert b <= rough_bound(n, "projective")
    # removing a line kills at most n - 1 triangles of the projective arrangement
    assert affine_bound(n - 1).value <= b


def test_small_n_rejected():
    with pytest.raises(NTooSmall):
        affine_bound(2)
    with pytest.raises(NTooSmall):
        projective_bound(3)


def test_exceptions():
    assert {n: known_exact(n, "projective").exact_max for n in (8, 11, 12, 14, 20)} == \
        {8: 16, 11: 32, 12: 40, 14: 58, 20: 124}
    assert {n: known_exact(n, "affine").exact_max for n in (11, 12)} == {11: 32, 12: 37}
    for mode, exc in EXCEPTIONS.items():
        for n in exc:
            assert known_exact(n, mode).reaches_bound is False


def test_misprint_rejected():
    kv = known_exact(12, "projective")
    assert kv.exact_max == 40 and "42" in kv.note
    assert not check_known(12, "projective", 42)
    assert check_known(12, "projective", 40)


@pytest.mark.parametrize("mode", ["affine", "projective"])
def test_unexceptional_values_reach_bound(mode):
    for n in range(4, 31):
        kv = known_exact(n, mode)
        if n not in EXCEPTIONS[mode]:
            assert kv.exact_max == bound(n, mode).value and kv.reaches_bound


def test_beyond_thirty():
    assert known_exact(31, "affine").status == "open"
    assert known_exact(33, "affine").status == "unknown"
    assert known_exact(33, "affine").exact_max is None


def test_family_rows():
    assert family_members(4, 8) == [5, 6, 9, 10, 17, 18, 33, 34]
    assert family_members(18, 5) == [19, 37, 73, 145, 289]
    assert family_members(6, 6) == [7, 13, 25, 49, 97, 193]
    assert set(family_schedule()) == {4, 6, 14, 18, 20, 22, 24, 26}
