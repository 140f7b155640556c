#!/usr/bin/env python3
"""SVG drawings of extremal arrangements: search maxima and family members.

    python scripts/render_gallery.py --out gallery
"""
import argparse
from pathlib import Path

from pseudolines.arrfile import write_arr
from pseudolines.constructions import family
from pseudolines.render import RenderOptions, render_svg
from pseudolines.search import SearchConfig, max_triangles_exact


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="gallery")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    items = {}
    for n in (5, 6, 7):
        items[f"affine_max_{n}"] = max_triangles_exact(SearchConfig(n)).arrangement()
    for n in (6, 7, 8):
        items[f"projective_max_{n}"] = max_triangles_exact(SearchConfig(n, "projective")).arrangement()
    res = family(4, 1, 2)
    items["family_4_1_2_affine"] = res.affine
    items["family_4_1_2_projective"] = res.projective
    for name, arr in items.items():
        wide = max(640, 24 * len(arr.word if hasattr(arr, "word") else arr.affine_part.word))
        (out / f"{name}.svg").write_text(render_svg(arr, RenderOptions(width=wide, height=420)))
        write_arr(out / f"{name}.arr", arr)
        print(f"{name}: n={arr.n}")


if __name__ == "__main__":
    main()
