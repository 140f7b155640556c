"""Static SVG drawings of wiring diagrams.

Wires are x-monotone polylines on integer tracks with one column per
crossing.  Triangles are filled polygons under the wires, unused segments
are dashed overlays on top of them.  Rendering only reads the face
structure, it never changes anything.
"""
from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .arrangement import ProjectiveArrangement
from .faces import build_faces, build_projective_faces


@dataclass(frozen=True)
class RenderOptions:
    width: int = 640
    height: int = 360
    shade_triangles: bool = True
    mark_unused: bool = True
    show_labels: bool = True

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError(f"dimensions must be positive, got {self.width}x{self.height}")


def _fmt(pt) -> str:
    return f"{pt[0]:.2f},{pt[1]:.2f}"


class _Layout:
    def __init__(self, n: int, word, opts: RenderOptions):
        self.n = n
        margin = 30.0
        cols = len(word) + 2
        self.left = margin
        self.right = opts.width - margin
        self.dx = (self.right - self.left) / cols
        self.top = margin
        self.bottom = opts.height - margin
        self.dy = (self.bottom - self.top) / max(n - 1, 1)
        perm = list(range(n))
        track = list(range(n))
        self.pts = [[(self.left, self.y(w))] for w in range(n)]
        self.cross = [[] for _ in range(n)]  # index into pts of each crossing point
        for i, p in enumerate(word):
            x0 = self.x(i + 1)
            a, b = perm[p - 1], perm[p]
            mid = (x0 + self.dx / 2, (self.y(p - 1) + self.y(p)) / 2)
            for w, t_new in ((a, p), (b, p - 1)):
                pts = self.pts[w]
                start = (x0, self.y(track[w]))
                if pts[-1] != start:
                    pts.append(start)
                self.cross[w].append(len(pts))
                pts.append(mid)
                pts.append((x0 + self.dx, self.y(t_new)))
                track[w] = t_new
            perm[p - 1], perm[p] = b, a
        for w in range(n):
            end = (self.right, self.y(track[w]))
            if self.pts[w][-1] != end:
                self.pts[w].append(end)

    def x(self, col: int) -> float:
        return self.left + col * self.dx

    def y(self, track: int) -> float:
        return self.bottom - track * self.dy

    def segment(self, sid: int):
        w, k = divmod(sid, self.n)
        pts, cr = self.pts[w], self.cross[w]
        lo = cr[k - 1] if k > 0 else 0
        hi = cr[k] if k < len(cr) else len(pts) - 1
        return pts[lo:hi + 1]


def _chain(pieces):
    """Join polylines sharing endpoints into one open path."""
    path = list(pieces[0])
    rest = [list(p) for p in pieces[1:]]
    while rest:
        for i, p in enumerate(rest):
            if p[0] == path[-1]:
                path.extend(p[1:])
            elif p[-1] == path[-1]:
                path.extend(reversed(p[:-1]))
            elif p[-1] == path[0]:
                path[:0] = p[:-1]
            elif p[0] == path[0]:
                path[:0] = list(reversed(p[1:]))
            else:
                continue
            rest.pop(i)
            break
        else:
            break  # pieces meet only at infinity
    return path


def _polygon(lay: _Layout, edges, kind: str):
    path = _chain([lay.segment(s) for s in edges])
    pad = min(lay.dy / 2, 20.0)
    if kind.startswith("bottom"):
        path += [(lay.right, lay.bottom + pad), (lay.left, lay.bottom + pad)]
    elif kind.startswith("top"):
        path += [(lay.right, lay.top - pad), (lay.left, lay.top - pad)]
    # a path from the left edge to the right edge needs the box corners in order
    if path[0][0] == lay.left and path[-1][0] == lay.right:
        path.reverse()
    return path


def render_svg(arr, opts: RenderOptions | None = None) -> str:
    """SVG 1.1 text for an affine or projective arrangement."""
    opts = opts or RenderOptions()
    if isinstance(arr, ProjectiveArrangement):
        A = arr.affine_part
        fs = build_projective_faces(arr)
        labels = list(arr.wire_labels)
        title = f"projective n={arr.n}, line {arr.infinity_label} at infinity"
    else:
        A = arr
        fs = build_faces(arr)
        labels = list(range(A.n))
        title = f"affine n={A.n}"
    m = A.n
    lay = _Layout(m, A.word, opts)
    tris = fs.triangles
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" '
        f'height="{opts.height}" viewBox="0 0 {opts.width} {opts.height}">',
        f"<title>{escape(title)}, {len(tris)} triangles</title>",
    ]
    if opts.shade_triangles:
        out.append('<g class="triangles" fill="#f2c14e" fill-opacity="0.6" stroke="none">')
        for fi in tris:
            f = fs.faces[fi]
            wire_edges = [s for s in f.edges if s < m * m]
            pts = _polygon(lay, wire_edges, f.kind)
            out.append(f'<polygon data-face="{fi}" points="{" ".join(map(_fmt, pts))}"/>')
        out.append("</g>")
    out.append('<g class="wires" fill="none" stroke="#222" stroke-width="1.5">')
    for w in range(m):
        pts = " ".join(map(_fmt, lay.pts[w]))
        out.append(f'<polyline data-line="{labels[w]}" points="{pts}"/>')
    out.append("</g>")
    if opts.mark_unused:
        out.append('<g class="unused" fill="none" stroke="#c0392b" stroke-width="2.5" '
                   'stroke-dasharray="5,4">')
        for sid, seg in enumerate(fs.segments):
            # the affine bound only concerns bounded segments; rays are skipped there
            if sid >= m * m or fs.used[sid] or not (seg.bounded or fs.projective):
                continue
            d = "M " + " L ".join(map(_fmt, lay.segment(sid)))
            out.append(f'<path data-segment="{sid}" d="{d}"/>')
        out.append("</g>")
    if opts.show_labels:
        out.append('<g class="labels" font-family="sans-serif" font-size="12" fill="#222">')
        for w in range(m):
            x, y = lay.pts[w][0]
            out.append(f'<text x="{x - 18:.2f}" y="{y + 4:.2f}">{labels[w]}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
