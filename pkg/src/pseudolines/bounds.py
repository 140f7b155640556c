"""Closed-form triangle bounds and the known exact maxima for n <= 30.

All values are computed in integer arithmetic; ``n(n - 5/2)/3`` is written
as ``n(2n - 5)/6``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NTooSmall

AFFINE = "affine"
PROJECTIVE = "projective"
MODES = (AFFINE, PROJECTIVE)


@dataclass(frozen=True)
class BoundSpec:
    n: int
    mode: str
    value: int
    formula_tag: str


@dataclass(frozen=True)
class KnownValue:
    n: int
    mode: str
    exact_max: Optional[int]
    reaches_bound: Optional[bool]
    bound: int
    status: str  # exact | unknown | open
    note: str = ""


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, f"{num}/{den} is not an integer"
    return q


def affine_bound(n: int) -> BoundSpec:
    if n < 3:
        raise NTooSmall(f"affine bound needs n >= 3, got {n}")
    r = n % 6
    if r in (0, 4):
        v, tag = _exact_div(n * (2 * n - 5), 6), "n(n-5/2)/3"
    elif r == 1:
        v, tag = _exact_div(n * (n - 2) - 2, 3), "(n(n-2)-2)/3"
    elif r == 2:
        v, tag = _exact_div(n * (2 * n - 5) - 4, 6), "(n(n-5/2)-2)/3"
    else:
        v, tag = _exact_div(n * (n - 2), 3), "n(n-2)/3"
    return BoundSpec(n, AFFINE, v, tag)


def projective_bound(n: int) -> BoundSpec:
    if n < 4:
        raise NTooSmall(f"projective bound needs n >= 4, got {n}")
    r = n % 6
    if r in (0, 4):
        v, tag = _exact_div(n * (n - 1), 3), "n(n-1)/3"
    elif r == 1:
        v, tag = _exact_div(n * (n - 2) - 2, 3), "(n(n-2)-2)/3"
    elif r == 2:
        v, tag = _exact_div(n * (n - 1) - 5, 3), "(n(n-1)-5)/3"
    else:
        v, tag = _exact_div(n * (n - 2), 3), "n(n-2)/3"
    return BoundSpec(n, PROJECTIVE, v, tag)


def bound(n: int, mode: str) -> BoundSpec:
    return affine_bound(n) if mode == AFFINE else projective_bound(n)


def rough_bound(n: int, mode: str) -> int:
    """Segment-budget bound: every triangle uses three private segments."""
    if mode == AFFINE:
        if n < 3:
            raise NTooSmall(f"affine rough bound needs n >= 3, got {n}")
        return n * (n - 2) // 3
    if n < 4:
        raise NTooSmall(f"projective rough bound needs n >= 4, got {n}")
    return n * (n - 1) // 3


EXCEPTIONS = {
    AFFINE: {11: 32, 12: 37},
    PROJECTIVE: {8: 16, 11: 32, 12: 40, 14: 58, 20: 124},
}
OPEN_VALUES = (31, 32, 37, 38, 43, 44, 47, 48, 55, 56)
# a published table gave 42 for twelve projective pseudo-lines; 40 is correct
MISPRINTS = {(12, PROJECTIVE): 42}
KNOWN_LIMIT = 30


def known_exact(n: int, mode: str) -> KnownValue:
    b = bound(n, mode).value
    if n > KNOWN_LIMIT:
        status = "open" if n in OPEN_VALUES else "unknown"
        return KnownValue(n, mode, None, None, b, status)
    exc = EXCEPTIONS[mode].get(n)
    note = ""
    if (n, mode) in MISPRINTS:
        note = f"{MISPRINTS[(n, mode)]} is a misprint"
    if exc is None:
        return KnownValue(n, mode, b, True, b, "exact", note)
    return KnownValue(n, mode, exc, False, b, "exact", note)


def check_known(n: int, mode: str, value: int) -> bool:
    """True iff ``value`` is the recorded maximum (rejects the known misprint)."""
    kv = known_exact(n, mode)
    return kv.exact_max is not None and kv.exact_max == value


# rows of the attainment table: m -> offsets for which n = m 2^t + offset reaches both bounds
FAMILY_ROWS = {
    4: (1, 2),
    6: (1,),
    14: (1, 2),
    18: (1,),
    20: (1, 2),
    22: (1, 2),
    24: (2,),
    26: (1, 2),
}


def family_members(m: int, terms: int = 6) -> list[int]:
    """Increasing list of n reached by the doubling family of ``m``."""
    offsets = FAMILY_ROWS[m]
    out = []
    t = 0
    while len(out) < terms:
        for off in offsets:
            out.append(m * 2 ** t + off)
        t += 1
    return out[:terms]


def family_schedule(terms: int = 6) -> dict[int, list[int]]:
    return {m: family_members(m, terms) for m in FAMILY_ROWS}
