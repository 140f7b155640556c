"""Plain-text and JSON reports: bound tables, known maxima, face statistics."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

from .arrangement import ProjectiveArrangement
from .bounds import AFFINE, KNOWN_LIMIT, MODES, PROJECTIVE, bound, known_exact
from .constructions import SEED_DIR, seed_path
from .faces import face_stats, unused_segment_report


def bounds_rows(mode: str, lo: int, hi: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        b = bound(n, mode)
        kv = known_exact(n, mode)
        rows.append({
            "n": n, "mode": mode, "residue": n % 6, "bound": b.value, "formula": b.formula_tag,
            "known": kv.exact_max, "status": kv.status,
        })
    return rows


def format_bounds(rows: list[dict]) -> str:
    out = [f"{'n':>6} {'n%6':>3} {'bound':>10} {'known':>8}  source"]
    for r in rows:
        known = "-" if r["known"] is None else str(r["known"])
        src = r["status"]
        if r["status"] == "exact":
            src = "exact, bound reached" if r["known"] == r["bound"] else "exact, below bound"
        out.append(f"{r['n']:>6} {r['residue']:>3} {r['bound']:>10} {known:>8}  {src}")
    return "\n".join(out) + "\n"


@dataclass
class KnownRow:
    n: int
    mode: str
    bound: int
    exact: Optional[int]
    attained: str  # reached | not reached
    witness: Optional[str]
    note: str


def table_thm13(root: Path | None = None) -> list[KnownRow]:
    """Known maxima for n = 3..30 in both modes, with stored witnesses."""
    rows = []
    for mode in MODES:
        start = 3 if mode == AFFINE else 4
        for n in range(start, KNOWN_LIMIT + 1):
            kv = known_exact(n, mode)
            path = seed_path(mode, n, root)
            rows.append(KnownRow(
                n, mode, kv.bound, kv.exact_max,
                "reached" if kv.reaches_bound else "not reached",
                str(path) if path.exists() else None,
                kv.note,
            ))
    return rows


def format_known(rows: list[KnownRow]) -> str:
    out = [f"{'mode':<10} {'n':>3} {'bound':>6} {'exact':>6}  {'status':<12} witness / note"]
    for r in rows:
        extra = "; ".join(x for x in (r.witness and _short(r.witness), r.note) if x)
        out.append(f"{r.mode:<10} {r.n:>3} {r.bound:>6} {r.exact:>6}  {r.attained:<12} {extra}")
    return "\n".join(out) + "\n"


def _short(path: str) -> str:
    p = Path(path)
    try:
        return str(p.relative_to(SEED_DIR.parent))
    except ValueError:
        return str(p)


def stats_dict(arr) -> dict:
    """Counts, per-line triangle touches and the unused segment list."""
    st = face_stats(arr)
    rep = unused_segment_report(arr)
    projective = isinstance(arr, ProjectiveArrangement)
    mode = PROJECTIVE if projective else AFFINE
    return {
        "mode": mode,
        "n": arr.n,
        "triangles": st.triangles,
        "wedges": st.wedges,
        "bound": bound(arr.n, mode).value,
        "unused_segments": st.unused_segments,
        "unused": list(rep.segments),
        "touch": {str(k): v for k, v in sorted(st.per_line_triangle_touch.items())},
    }


def stats_text(arr) -> str:
    d = stats_dict(arr)
    out = []
    for k, v in d.items():
        if isinstance(v, dict):
            v = ",".join(f"{a}:{b}" for a, b in v.items())
        elif isinstance(v, list):
            v = ",".join(map(str, v))
        out.append(f"{k}={v}")
    return "\n".join(out) + "\n"


def to_json(obj) -> str:
    if isinstance(obj, list):
        obj = [asdict(x) if hasattr(x, "__dataclass_fields__") else x for x in obj]
    elif hasattr(obj, "__dataclass_fields__"):
        obj = asdict(obj)
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
