"""Triangles in simple arrangements of pseudo-lines.

Wiring diagrams, face structure, closed-form bounds, doubling
constructions and exhaustive search.
"""
from .arrangement import (
    AffineArrangement,
    CrossingWord,
    ProjectiveArrangement,
    canonical_key,
    projective_closure,
    projectivize,
    reroot,
    triangle3,
    validate,
)
from .bounds import affine_bound, bound, known_exact, projective_bound
from .faces import build_faces, build_projective_faces, count_triangles, face_stats
from .arrfile import emit_arr, parse_arr, read_arr, write_arr

__version__ = "0.1.0"

__all__ = [
    "AffineArrangement", "CrossingWord", "ProjectiveArrangement", "canonical_key",
    "projective_closure", "projectivize", "reroot", "triangle3", "validate",
    "affine_bound", "bound", "known_exact", "projective_bound",
    "build_faces", "build_projective_faces", "count_triangles", "face_stats",
    "emit_arr", "parse_arr", "read_arr", "write_arr",
]
