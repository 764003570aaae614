"""Word length in surface groups with simple generating sets.

Build a one-vertex complex from a generating set, construct its dual arc
system, compute word and conjugacy lengths by move-closure rewriting,
cross-check against a universal-cover oracle, and count curves by length.
"""

from .arcsys import ArcSystem, build_arc_system, raw_crossing_count, trace_components
from .census import christoffel_word, count_series, fit_exponent, orbit_count_torus
from .cover import TilingBall, build_ball, oracle_conjugacy_length, oracle_word_length
from .engine import GeodesicEngine, enumerate_galleries
from .errors import SwlError
from .surface import (
    Complex,
    Face,
    SurfaceSpec,
    build_complex,
    face_boundary_word,
    parse_surface_spec,
    search_generating_sets,
)
from .svg import emit_svg
from .words import free_reduce, parse_word, format_word

__version__ = "0.1.0"

__all__ = [
    "ArcSystem",
    "Complex",
    "Face",
    "GeodesicEngine",
    "SurfaceSpec",
    "SwlError",
    "TilingBall",
    "build_arc_system",
    "build_ball",
    "build_complex",
    "christoffel_word",
    "count_series",
    "emit_svg",
    "enumerate_galleries",
    "face_boundary_word",
    "fit_exponent",
    "format_word",
    "free_reduce",
    "orbit_count_torus",
    "oracle_conjugacy_length",
    "oracle_word_length",
    "parse_surface_spec",
    "parse_word",
    "raw_crossing_count",
    "search_generating_sets",
    "trace_components",
]
