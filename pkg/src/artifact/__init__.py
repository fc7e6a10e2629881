"""Magic knight tours of the 4x4x4 cube: tables, verification, symmetry,
enumeration and pattern analysis."""
from .cube import Arrangement, Coord, coord_of, index_of, knight_adjacent, build_tables
from .verifier import MagicReport, check_tour, diagonal_sums, verify, complement
from .symmetry import (TRANSFORMS, CubeTransform, Census, apply, frenicle_canonical,
                       primary_canonical, build_census)
from .patterns import QuadReport, classify_pattern, cyclic_order
from .formats import TourRecord, parse_layers, emit_layers, emit_json, fixtures
from .search import SearchConfig, SearchState, propagate, split_frontier, enumerate_tours

__all__ = [
    "Arrangement", "Coord", "coord_of", "index_of", "knight_adjacent", "build_tables",
    "MagicReport", "check_tour", "diagonal_sums", "verify", "complement",
    "TRANSFORMS", "CubeTransform", "Census", "apply", "frenicle_canonical",
    "primary_canonical", "build_census", "QuadReport", "classify_pattern", "cyclic_order",
    "TourRecord", "parse_layers", "emit_layers", "emit_json", "fixtures",
    "SearchConfig", "SearchState", "propagate", "split_frontier", "enumerate_tours",
]
