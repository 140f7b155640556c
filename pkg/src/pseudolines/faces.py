"""Planar face structure of wiring diagrams and the counts derived from it.

The sweep keeps one open face per gap between tracks (gap ``g`` lies between
tracks ``g - 1`` and ``g``, gap 0 below everything).  A crossing at
position ``p`` closes the face in gap ``p`` and opens a new one, and hands
a fresh segment to the faces in gaps ``p - 1`` and ``p + 1``.

Segments are numbered ``wire * n + k`` where ``k`` counts crossings passed on
that wire; ``k = 0`` and ``k = n - 1`` are the unbounded rays.  In the
projective structure the ``n - 1`` segments of the line at infinity come
after all wire segments.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .arrangement import AffineArrangement, ProjectiveArrangement
from .errors import UnknownLine, WrongResidue


@dataclass(frozen=True)
class Face:
    edges: tuple[int, ...]
    bounded: bool
    kind: str  # bounded | left | right | bottom | top, plus "+inf" in projective mode
    gap: int
    left: int | None = None  # crossing that opened the face
    right: int | None = None  # crossing that closed it

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Segment:
    line: int
    index: int
    bounded: bool
    endpoints: tuple[int | None, int | None]  # crossing ids, None at infinity


@dataclass(frozen=True)
class FaceStructure:
    n: int
    projective: bool
    vertices: tuple[tuple[int, int, int], ...]  # (position, lower wire, upper wire)
    segments: tuple[Segment, ...]
    faces: tuple[Face, ...]
    used: tuple[bool, ...]
    seg_faces: tuple[tuple[int, int], ...]  # faces on the two sides of each segment

    @property
    def triangles(self) -> list[int]:
        if self.projective:
            return [i for i, f in enumerate(self.faces) if f.size == 3]
        return [i for i, f in enumerate(self.faces) if f.bounded and f.size == 3]

    @property
    def bounded_faces(self) -> int:
        return sum(f.bounded for f in self.faces)

    def segments_of(self, line: int) -> list[int]:
        return [i for i, s in enumerate(self.segments) if s.line == line]


@dataclass(frozen=True)
class FaceStats:
    triangles: int
    wedges: int
    unused_segments: int
    per_line_triangle_touch: dict = field(default_factory=dict)


def _sweep(n: int, word):
    """Single left-to-right pass; returns raw face/segment tables."""
    seg_start = [None] * (n * n)
    seg_end = [None] * (n * n)
    below = [0] * (n * n)
    above = [0] * (n * n)
    perm = list(range(n))
    cur = [w * n for w in range(n)]  # current segment id per wire
    f_edges: list[list[int]] = []
    f_kind: list[str] = []
    f_gap: list[int] = []
    f_lr: list[list] = []
    open_face = [0] * (n + 1)

    def new_face(edges, kind, g, left=None):
        f_edges.append(edges)
        f_kind.append(kind)
        f_gap.append(g)
        f_lr.append([left, None])
        open_face[g] = len(f_edges) - 1

    new_face([cur[perm[0]]], "bottom", 0)
    for g in range(1, n):
        new_face([cur[perm[g - 1]], cur[perm[g]]], "left", g)
    new_face([cur[perm[n - 1]]], "top", n)
    for t in range(n):
        s = cur[perm[t]]
        below[s] = open_face[t]
        above[s] = open_face[t + 1]

    vertices = []
    for i, p in enumerate(word):
        lo, hi = p - 1, p
        a, b = perm[lo], perm[hi]
        vertices.append((p, a, b))
        seg_end[cur[a]] = i
        seg_end[cur[b]] = i
        cur[a] += 1
        cur[b] += 1
        sa, sb = cur[a], cur[b]
        seg_start[sa] = seg_start[sb] = i
        perm[lo], perm[hi] = b, a
        # the face in gap p is closed by this crossing and a new one starts
        f_lr[open_face[p]][1] = i
        new_face([sb, sa], "bounded", p, i)
        f_edges[open_face[lo]].append(sb)
        f_edges[open_face[hi + 1]].append(sa)
        below[sb], above[sb] = open_face[lo], open_face[hi]
        below[sa], above[sa] = open_face[hi], open_face[hi + 1]
    # faces still open at the right end are unbounded
    for g in range(1, n):
        f_kind[open_face[g]] = "right"
    return vertices, seg_start, seg_end, below, above, f_edges, f_kind, f_gap, f_lr


def build_faces(A: AffineArrangement, check: bool = True) -> FaceStructure:
    """Full face structure of an affine arrangement."""
    n = A.n
    vertices, s0, s1, below, above, f_edges, f_kind, f_gap, f_lr = _sweep(n, A.word)
    faces = tuple(Face(tuple(e), k == "bounded", k, g, *lr)
                  for e, k, g, lr in zip(f_edges, f_kind, f_gap, f_lr))
    segments = tuple(
        Segment(sid // n, sid % n, 0 < sid % n < n - 1, (s0[sid], s1[sid]))
        for sid in range(n * n)
    )
    used = [False] * (n * n)
    for f in faces:
        if f.bounded and f.size == 3:
            for s in f.edges:
                used[s] = True
    fs = FaceStructure(n, False, tuple(vertices), segments, faces, tuple(used),
                       tuple(zip(below, above)))
    if check:
        check_affine_formulas(fs)
    return fs


def _infinity_arcs(m: int):
    """Pairs of antipodal unbounded gaps sharing a segment of the line at infinity.

    Going around the circle at infinity the unbounded faces of an ``m``-wire
    chart read: bottom, right faces of gaps 1..m-1, top, left faces of gaps
    m-1..1.  Face ``i`` and face ``i + m`` border the same segment.
    """
    ring = [("bottom", 0)] + [("right", g) for g in range(1, m)] + [("top", m)] + \
           [("left", g) for g in range(m - 1, 0, -1)]
    return [(ring[i], ring[i + m]) for i in range(m)]


def build_projective_faces(P: ProjectiveArrangement, check: bool = True) -> FaceStructure:
    """Face structure of a projective arrangement.

    Lines are reported by label; segments of the line at infinity are
    appended after the wire segments.  Unbounded faces of the affine chart
    each gain one edge on the line at infinity.
    """
    m = P.affine_part.n
    n = P.n
    labels = P.wire_labels
    aff = build_faces(P.affine_part, check=check)
    faces = list(aff.faces)
    where = {(f.kind, f.gap): i for i, f in enumerate(faces) if not f.bounded}
    segs = []
    for s in aff.segments:
        # the two rays of a wire meet at the same point at infinity
        segs.append(Segment(labels[s.line], s.index, True, s.endpoints))
    seg_faces = list(aff.seg_faces)
    for j, (f1, f2) in enumerate(_infinity_arcs(m)):
        sid = len(segs)
        segs.append(Segment(P.infinity_label, j, True, (None, None)))
        i1, i2 = where[f1], where[f2]
        for i in (i1, i2):
            f = faces[i]
            faces[i] = Face(f.edges + (sid,), False, f.kind + "+inf", f.gap, f.left, f.right)
        seg_faces.append((i1, i2))
    used = [False] * len(segs)
    for f in faces:
        if f.size == 3:
            for s in f.edges:
                used[s] = True
    fs = FaceStructure(n, True, aff.vertices, tuple(segs), tuple(faces), tuple(used),
                       tuple(seg_faces))
    if check:
        check_projective_formulas(fs)
    return fs


def check_affine_formulas(fs: FaceStructure):
    n = fs.n
    assert len(fs.faces) == n * (n + 1) // 2 + 1, "face count"
    assert fs.bounded_faces == n * (n - 3) // 2 + 1, "bounded face count"
    assert len(fs.faces) - fs.bounded_faces == 2 * n, "unbounded face count"
    assert sum(s.bounded for s in fs.segments) == n * (n - 2), "bounded segments"
    if n >= 4:
        _assert_no_shared_triangle_edge(fs)


def check_projective_formulas(fs: FaceStructure):
    n = fs.n
    assert len(fs.faces) == n * (n - 1) // 2 + 1, "projective face count"
    assert len(fs.segments) == n * (n - 1), "projective segment count"
    if n >= 4:
        _assert_no_shared_triangle_edge(fs)


def _assert_no_shared_triangle_edge(fs: FaceStructure):
    c = Counter(s for t in fs.triangles for s in fs.faces[t].edges)
    assert not c or max(c.values()) == 1, "segment edges two triangles"


# -- counts ----------------------------------------------------------------

def _triangle_count(n: int, word) -> tuple[int, int]:
    """(bounded triangles, wedges) from a lean pass that only counts edges."""
    events = [0] * (n + 1)
    opened = [False] * (n + 1)
    tri = 0
    wedges = 0
    for p in word:
        if opened[p]:
            if events[p] == 1:
                tri += 1
        elif events[p] == 0:
            wedges += 1  # left face closed with two rays only
        opened[p] = True
        events[p] = 0
        events[p - 1] += 1
        events[p + 1] += 1
    for g in range(1, n):
        if events[g] == 0:
            wedges += 1
    # bottom and top faces have 1 + events edges
    wedges += (events[0] == 1) + (events[n] == 1)
    return tri, wedges


def triangle_crossings(n: int, word) -> list[tuple[int, int, int]]:
    """``(opening, middle, closing)`` crossing indices of every bounded triangle."""
    last = [None] * (n + 1)
    mid = [None] * (n + 1)
    events = [0] * (n + 1)
    out = []
    for i, p in enumerate(word):
        if last[p] is not None and events[p] == 1:
            out.append((last[p], mid[p], i))
        last[p] = i
        events[p] = 0
        for g in (p - 1, p + 1):
            events[g] += 1
            mid[g] = i
    return out


def count_triangles_affine(A: AffineArrangement) -> int:
    return _triangle_count(A.n, A.word)[0]


def wedge_count(A: AffineArrangement) -> int:
    """Unbounded faces bounded by exactly two rays sharing a vertex."""
    return _triangle_count(A.n, A.word)[1]


def count_triangles_projective(P: ProjectiveArrangement) -> int:
    t, w = _triangle_count(P.affine_part.n, P.affine_part.word)
    return t + w


def count_triangles(arr) -> int:
    if isinstance(arr, ProjectiveArrangement):
        return count_triangles_projective(arr)
    return count_triangles_affine(arr)


def structure(arr, check: bool = True) -> FaceStructure:
    if isinstance(arr, ProjectiveArrangement):
        return build_projective_faces(arr, check)
    return build_faces(arr, check)


@dataclass(frozen=True)
class UnusedReport:
    count: int
    segments: tuple[int, ...]
    unbounded: tuple[int, ...] = ()


def unused_segment_report(arr) -> UnusedReport:
    """Segments that are not an edge of any triangle.

    Affine mode counts bounded segments only and lists the (always unused)
    rays separately.
    """
    fs = structure(arr)
    if fs.projective:
        segs = tuple(i for i, u in enumerate(fs.used) if not u)
        return UnusedReport(len(segs), segs)
    segs = tuple(i for i, s in enumerate(fs.segments) if s.bounded and not fs.used[i])
    rays = tuple(i for i, s in enumerate(fs.segments) if not s.bounded)
    return UnusedReport(len(segs), segs, rays)


def triangles_touching_line(arr, line: int, fs: FaceStructure | None = None) -> int:
    """Number of triangles with at least one edge on ``line``."""
    if line not in arr.lines:
        raise UnknownLine(f"line {line} not in arrangement")
    fs = fs or structure(arr)
    return sum(
        any(fs.segments[s].line == line for s in fs.faces[t].edges) for t in fs.triangles
    )


def face_stats(arr) -> FaceStats:
    fs = structure(arr)
    if fs.projective:
        t, w = _triangle_count(arr.affine_part.n, arr.affine_part.word)
        unused = sum(not u for u in fs.used)
    else:
        t, w = _triangle_count(arr.n, arr.word)
        unused = sum(s.bounded and not u for s, u in zip(fs.segments, fs.used))
    touch = Counter()
    for f in fs.triangles:
        for line in {fs.segments[s].line for s in fs.faces[f].edges}:
            touch[line] += 1
    return FaceStats(
        triangles=len(fs.triangles),
        wedges=w,
        unused_segments=unused,
        per_line_triangle_touch={l: touch.get(l, 0) for l in arr.lines},
    )


@dataclass(frozen=True)
class PentagonResult:
    status: str  # "slack" | "pentagon-found"
    slack: int = 0
    face: int | None = None


def pentagon_check(P: ProjectiveArrangement) -> PentagonResult:
    """At the n = 2 (mod 6) bound the five unused segments bound one pentagon."""
    from .bounds import projective_bound

    n = P.n
    if n % 6 != 2:
        raise WrongResidue(f"pentagon check needs n = 2 (mod 6), got n = {n}")
    bound = projective_bound(n).value
    fs = build_projective_faces(P)
    p3 = len(fs.triangles)
    if p3 != bound:
        return PentagonResult("slack", bound - p3)
    unused = {i for i, u in enumerate(fs.used) if not u}
    assert len(unused) == 5, "bound attained with a number of unused segments other than five"
    for i, f in enumerate(fs.faces):
        if f.size == 5 and set(f.edges) == unused:
            return PentagonResult("pentagon-found", 0, i)
    raise AssertionError("five unused segments do not bound a pentagon")


def has_unused_near_every_line(A: AffineArrangement, fs: FaceStructure | None = None) -> bool:
    """For every line L some unused bounded segment of another line ends on L."""
    fs = fs or build_faces(A)
    n = A.n
    ok = [False] * n
    for sid, seg in enumerate(fs.segments):
        if not seg.bounded or fs.used[sid]:
            continue
        for v in seg.endpoints:
            _, a, b = fs.vertices[v]
            other = b if a == seg.line else a
            ok[other] = True
    return all(ok)


def unused_per_line(fs: FaceStructure) -> dict:
    out = Counter()
    for sid, seg in enumerate(fs.segments):
        if not fs.used[sid]:
            out[seg.line] += 1
    return out
