"""Seeds, the doubling construction, far lines and the infinite families.

Doubling replaces a designated wire of an odd affine arrangement on ``m``
wires by a bundle of ``m`` parallel wires.  The bundle crosses every other
wire where the designated wire did, and along each of the ``m`` segments of
the designated wire it performs one round of odd-even transposition: all
bundle wires pair up and swap except one idle wire at the top or at the
bottom.  The idle wire sits on the side of the triangle that touched the
segment, so that triangle survives; the rounds alternate sides and after
``m`` rounds every pair of bundle wires has crossed exactly once.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .arrangement import (
    AffineArrangement,
    ProjectiveArrangement,
    projectivize,
    projective_closure,
    rerooted,
    rotate,
    triangle3,
)
from .arrfile import read_arr, write_arr
from .bounds import AFFINE, PROJECTIVE, bound, known_exact
from .errors import (
    ConstructionSelfCheckFailed,
    HypothesisNotMet,
    PositionOutOfRange,
    SeedFailsBound,
    SeedUnavailable,
    StageFailedBound,
    UnknownSeed,
)
from .faces import (
    build_faces,
    build_projective_faces,
    count_triangles,
    count_triangles_affine,
    face_stats,
    structure,
)

SEED_DIR = Path(__file__).parent / "seeds"

AFFINE_ODD = "affine-odd"
PROJECTIVE_EVEN = "projective-even"


@dataclass(frozen=True)
class Seed:
    name: str
    arrangement: object
    provenance: str  # analytic | search-derived | ingested-file

    @property
    def mode(self) -> str:
        return PROJECTIVE if isinstance(self.arrangement, ProjectiveArrangement) else AFFINE

    @property
    def n(self) -> int:
        return self.arrangement.n


def _mode_of(arr) -> str:
    return PROJECTIVE if isinstance(arr, ProjectiveArrangement) else AFFINE


def _verified(name, arr, provenance) -> Seed:
    mode = _mode_of(arr)
    target = known_exact(arr.n, mode)
    want = target.exact_max if target.exact_max is not None else target.bound
    got = count_triangles(arr)
    if got != want:
        raise SeedFailsBound(f"seed {name}: {got} triangles, expected {want}")
    return Seed(name, arr, provenance)


def seed_path(mode: str, n: int, root: Path | None = None) -> Path:
    return (root or SEED_DIR) / mode / f"{n}.arr"


def available_seeds(root: Path | None = None) -> dict[tuple[str, int], str]:
    out = {(AFFINE, 3): "triangle3", (PROJECTIVE, 4): "projective4"}
    root = root or SEED_DIR
    for mode in (AFFINE, PROJECTIVE):
        d = root / mode
        if d.is_dir():
            for p in sorted(d.glob("*.arr")):
                out.setdefault((mode, int(p.stem)), f"{mode}/{p.stem}")
    return out


def seed(name: str, root: Path | None = None) -> Seed:
    """Look up a built-in or stored seed and verify its triangle count."""
    if name in ("triangle3", "affine/3"):
        return _verified("triangle3", triangle3(), "analytic")
    if name in ("projective4", "projective/4"):
        return _verified("projective4", projectivize(triangle3()), "analytic")
    mode, _, n = name.partition("/")
    if mode not in (AFFINE, PROJECTIVE) or not n.isdigit():
        raise UnknownSeed(name)
    path = seed_path(mode, int(n), root)
    if not path.exists():
        raise UnknownSeed(name)
    arr = read_arr(path)
    prov = "ingested-file"
    side = path.with_suffix(".json")
    if side.exists():
        prov = json.loads(side.read_text()).get("provenance", prov)
    if _mode_of(arr) != mode or arr.n != int(n):
        raise SeedFailsBound(f"{path} does not hold a {mode} arrangement of {n} lines")
    return _verified(name, arr, prov)


def store_seed(arr, provenance: str, root: Path | None = None, **info) -> Path:
    mode = _mode_of(arr)
    path = seed_path(mode, arr.n, root)
    write_arr(path, arr, {"triangles": count_triangles(arr)})
    meta = {"provenance": provenance, "triangles": count_triangles(arr), **info}
    path.with_suffix(".json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return path


# -- doubling --------------------------------------------------------------

@dataclass(frozen=True)
class DoublingPlan:
    input: object
    designated_line: int
    mode: Optional[str] = None

    def __post_init__(self):
        if self.mode is None:
            m = PROJECTIVE_EVEN if isinstance(self.input, ProjectiveArrangement) else AFFINE_ODD
            object.__setattr__(self, "mode", m)


def _required_touch(arr) -> int:
    return arr.n - 1 if isinstance(arr, ProjectiveArrangement) else arr.n - 2


def check_plan(plan: DoublingPlan):
    arr = plan.input
    if plan.mode == AFFINE_ODD:
        if not isinstance(arr, AffineArrangement) or arr.n % 2 == 0:
            raise HypothesisNotMet("affine-odd doubling needs an affine arrangement with n odd")
    elif plan.mode == PROJECTIVE_EVEN:
        if not isinstance(arr, ProjectiveArrangement) or arr.n % 2 == 1:
            raise HypothesisNotMet("projective-even doubling needs a projective arrangement with n even")
    else:
        raise ValueError(f"unknown doubling mode {plan.mode!r}")
    touch = face_stats(arr).per_line_triangle_touch
    if plan.designated_line not in touch:
        raise HypothesisNotMet(f"line {plan.designated_line} not in arrangement")
    need = _required_touch(arr)
    if touch[plan.designated_line] != need:
        raise HypothesisNotMet(
            f"line {plan.designated_line} touches {touch[plan.designated_line]} triangles, needs {need}")


def find_designated_line(arr) -> Optional[int]:
    """Smallest line touching ``n - 2`` (affine) / ``n - 1`` (projective) triangles."""
    need = _required_touch(arr)
    touch = face_stats(arr).per_line_triangle_touch
    for line in sorted(touch):
        if touch[line] == need:
            return line
    return None


def _segment_sides(fs, d: int, m: int, labels_line) -> list[Optional[str]]:
    """Side (top/bottom) of the triangle on each segment of wire ``d``."""
    tri = set(fs.triangles)
    sides = []
    for k in range(m):
        sid = next(i for i, s in enumerate(fs.segments)
                   if s.line == labels_line and s.index == k)
        below, above = fs.seg_faces[sid]
        if above in tri:
            sides.append("top")
        elif below in tri:
            sides.append("bottom")
        else:
            sides.append(None)
    return sides


def bundle_word(A: AffineArrangement, d: int, sides: list[str]) -> tuple[int, ...]:
    """Crossing word with wire ``d`` replaced by a woven bundle of ``n`` wires."""
    m = A.n
    perm = list(range(m))
    td = d
    out: list[int] = []

    def weave(k):
        first = td + 1 if sides[k] == "top" else td + 2
        out.extend(range(first, td + m, 2))

    weave(0)
    k = 0
    for p in A.word:
        lo, hi = p - 1, p
        if perm[lo] == d:
            t_other = lo + m
            out.extend(range(t_other, lo, -1))
            td = hi
            k += 1
            weave(k)
        elif perm[hi] == d:
            out.extend(range(lo + 1, lo + m + 1))
            td = lo
            k += 1
            weave(k)
        else:
            out.append(p if lo < td else p + m - 1)
        perm[lo], perm[hi] = perm[hi], perm[lo]
    return tuple(out)


def _unused_total(fs) -> int:
    if fs.projective:
        return sum(not u for u in fs.used)
    return sum(s.bounded and not u for s, u in zip(fs.segments, fs.used))


@dataclass(frozen=True)
class DoublingResult:
    output: object
    delta: int
    expected_delta: int
    unused_before: int
    unused_after: int
    infinity_line: Optional[int] = None


def _alternates(sides) -> bool:
    return all(s is not None for s in sides) and all(a != b for a, b in zip(sides, sides[1:]))


def _flip(sides):
    return ["bottom" if s == "top" else "top" for s in sides]


def _double_affine(A: AffineArrangement, d: int, fs=None) -> DoublingResult:
    m = A.n
    fs = fs or build_faces(A)
    sides = _segment_sides(fs, d, m, d)
    inner = sides[1:m - 1]
    if not _alternates(inner):
        raise HypothesisNotMet(f"bounded segments of line {d} are not all used")
    first = "bottom" if (inner[0] if inner else "top") == "top" else "top"
    full = [first if k % 2 == 0 else ("bottom" if first == "top" else "top") for k in range(m)]
    before = count_triangles_affine(A)
    expected = (m - 1) ** 2
    for cand in (full, _flip(full)):
        B = AffineArrangement(bundle_word(A, d, cand), 2 * m - 1)
        after = count_triangles_affine(B)
        if after - before == expected:
            fb = build_faces(B)
            return DoublingResult(B, after - before, expected, _unused_total(fs), _unused_total(fb))
    raise ConstructionSelfCheckFailed(f"no weaving orientation gave +{expected} triangles")


def _double_projective(P: ProjectiveArrangement, d: int) -> DoublingResult:
    n = P.n
    m = n - 1
    before = count_triangles(P)
    expected = (n - 1) * (n - 2)
    unused_before = _unused_total(build_projective_faces(P))
    for x in P.lines:
        if x == d:
            continue
        Q = rerooted(P, x)
        fs = build_projective_faces(Q)
        wire = Q.wire_labels.index(d)
        sides = _segment_sides(fs, wire, m, d)
        if not _alternates(sides):
            continue
        for cand in (sides, _flip(sides)):
            B = AffineArrangement(bundle_word(Q.affine_part, wire, cand), 2 * m - 1)
            R = ProjectiveArrangement(B)
            after = count_triangles(R)
            if after - before == expected:
                ua = _unused_total(build_projective_faces(R))
                return DoublingResult(R, after - before, expected, unused_before, ua, x)
    raise ConstructionSelfCheckFailed(f"no chart and orientation gave +{expected} triangles")


def double_with_report(plan: DoublingPlan) -> DoublingResult:
    check_plan(plan)
    if plan.mode == AFFINE_ODD:
        res = _double_affine(plan.input, plan.designated_line)
    else:
        res = _double_projective(plan.input, plan.designated_line)
    if res.unused_after != res.unused_before:
        raise ConstructionSelfCheckFailed(
            f"unused segments changed from {res.unused_before} to {res.unused_after}")
    return res


def double(plan: DoublingPlan):
    """Apply the doubling construction; the triangle delta is recounted."""
    return double_with_report(plan).output


# -- far line --------------------------------------------------------------

def add_far_line(A: AffineArrangement, side: int) -> AffineArrangement:
    """Add a wire crossing all others beyond every existing crossing.

    ``side`` in ``[0, 2n)`` picks the place on the circle at infinity:
    ``side % n`` rotations of the vertical direction, then the new wire
    sweeps down across the left ends (``side < n``) or the right ends.
    """
    n = A.n
    if not 0 <= side < 2 * n:
        raise PositionOutOfRange(f"far-line side {side} outside [0, {2 * n})")
    B = A
    for _ in range(side % n):
        B, _ = rotate(B)
    down = list(range(n, 0, -1))
    if side < n:
        word = down + [p + 1 for p in B.word]
    else:
        word = list(B.word) + down
    return AffineArrangement(word, n + 1)


def far_line_sides(A: AffineArrangement) -> list[AffineArrangement]:
    return [add_far_line(A, s) for s in range(2 * A.n)]


def best_far_line(A: AffineArrangement) -> AffineArrangement:
    """Far line maximising the triangle count; ties go to the smallest side."""
    best, best_t = None, -1
    for s in range(2 * A.n):
        B = add_far_line(A, s)
        t = count_triangles_affine(B)
        if t > best_t:
            best, best_t = B, t
    return best


# -- families --------------------------------------------------------------

@dataclass
class StageReport:
    stage: int
    n: int
    mode: str
    operation: str
    triangles: int
    bound: int
    delta: Optional[int] = None
    expected_delta: Optional[int] = None
    unused_before: Optional[int] = None
    unused_after: Optional[int] = None

    @property
    def reaches_bound(self) -> bool:
        return self.triangles == self.bound


@dataclass
class FamilyResult:
    m: int
    t: int
    offset: int
    n: int
    affine: AffineArrangement
    projective: ProjectiveArrangement
    stages: list[StageReport] = field(default_factory=list)


def _chain_start(mode: str, m: int, t: int, offset: int, root=None):
    have = available_seeds(root)
    for s in range(t, -8, -1):
        base = m * 2 ** s if s >= 0 else m / 2 ** (-s)
        if base != int(base) or base < 1:
            break
        n0 = int(base) + offset
        if (mode, n0) in have:
            return s, seed(have[(mode, n0)], root)
    raise SeedUnavailable(f"no {mode} seed for n = {m}*2^s + {offset}, s <= {t}")


def _stage(stages, arr, mode, op, res=None, check=True):
    n = arr.n
    tri = count_triangles(arr)
    rep = StageReport(len(stages), n, mode, op, tri, bound(n, mode).value)
    if res is not None:
        rep.delta, rep.expected_delta = res.delta, res.expected_delta
        rep.unused_before, rep.unused_after = res.unused_before, res.unused_after
    stages.append(rep)
    if check and not rep.reaches_bound:
        raise StageFailedBound(rep.stage, f"{mode} n={n} has {tri} triangles, bound {rep.bound}")
    return rep


def _double_chain(arr, steps, stages, mode):
    for _ in range(steps):
        d = find_designated_line(arr)
        if d is None:
            raise StageFailedBound(len(stages), f"no line of the {arr.n}-line arrangement "
                                                f"meets the doubling hypothesis")
        res = double_with_report(DoublingPlan(arr, d))
        arr = res.output
        _stage(stages, arr, mode, f"double(line {d})", res)
    return arr


def family(m: int, t: int, offset: int = 1, root=None) -> FamilyResult:
    """Arrangements of ``n = m 2^t + offset`` lines reaching both bounds.

    Offset 1: affine chain of doublings from the nearest seed, and the
    projective arrangement formed by those wires.  Offset 2: the far line of
    the offset-1 affine arrangement, and a chain of projective doublings.
    Every stage is recounted against the theorem bound.
    """
    if offset not in (1, 2):
        raise ValueError("offset must be 1 or 2")
    if t < 0:
        raise ValueError("t must be non-negative")
    n = m * 2 ** t + offset
    stages: list[StageReport] = []
    s, sd = _chain_start(AFFINE, m, t, 1, root)
    A = sd.arrangement
    _stage(stages, A, AFFINE, f"seed {sd.name}")
    A = _double_chain(A, t - s, stages, AFFINE)
    if offset == 1:
        P = projective_closure(A)
        _stage(stages, P, PROJECTIVE, "projective closure")
    else:
        A = best_far_line(A)
        _stage(stages, A, AFFINE, "far line")
        s, sd = _chain_start(PROJECTIVE, m, t, 2, root)
        P = sd.arrangement
        _stage(stages, P, PROJECTIVE, f"seed {sd.name}")
        P = _double_chain(P, t - s, stages, PROJECTIVE)
    return FamilyResult(m, t, offset, n, A, P, stages)
