"""Quad structure and cyclic symmetry of tours.

A quad is the set of cells holding 4k+1..4k+4. A tour is of the
squares-and-diamonds type when every quad closes into a knight 4-cycle.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cube import NCELLS, COORDS, Arrangement, knight_adjacent
from . import verifier
from .symmetry import images

SQUARES_AND_DIAMONDS = "squares-and-diamonds"
IRREGULAR = "irregular"


@dataclass(frozen=True)
class Quad:
    k: int
    cells: tuple
    is_cycle: bool
    is_planar: bool


@dataclass(frozen=True)
class QuadReport:
    quads: tuple

    @property
    def n_cycles(self) -> int:
        return sum(q.is_cycle for q in self.quads)


def _arr(a) -> Arrangement:
    return a if isinstance(a, Arrangement) else Arrangement(a)


def quad_report(a) -> QuadReport:
    pos = _arr(a).positions
    quads = []
    for k in range(NCELLS // 4):
        cells = tuple(int(pos[4 * k + j]) for j in range(1, 5))
        cyc = all(knight_adjacent(cells[j], cells[(j + 1) % 4]) for j in range(4))
        xyz = COORDS[list(cells)]
        planar = bool(any(len(set(xyz[:, ax])) == 1 for ax in range(3)))
        quads.append(Quad(k, cells, cyc, planar))
    return QuadReport(tuple(quads))


def classify_pattern(a) -> tuple[QuadReport, str]:
    a = _arr(a)
    if not verifier.check_tour(a)[0]:
        raise ValueError("pattern classification needs a knight tour")
    rep = quad_report(a)
    kind = SQUARES_AND_DIAMONDS if all(q.is_cycle for q in rep.quads) else IRREGULAR
    return rep, kind


def shift(values, s: int) -> np.ndarray:
    """Renumber along the cycle: v -> ((v - 1 + s) mod 64) + 1."""
    v = np.asarray(values, dtype=np.int64)
    return (v - 1 + s) % NCELLS + 1


def cyclic_order(a) -> int:
    """Largest d | 64 such that shifting the numbering by 64/d gives a symmetry image."""
    a = _arr(a)
    is_tour, closed = verifier.check_tour(a)
    if not closed:
        raise ValueError("cyclic order is defined for closed tours only")
    imgs = {row.tobytes() for row in images(a.values)}
    d = NCELLS
    while d > 1:
        if shift(a.values, NCELLS // d).tobytes() in imgs:
            return d
        d //= 2
    return 1


def magic_shifts(a) -> tuple:
    """Shifts s in 0..63 whose cyclic renumbering of a closed tour is still magic.

    This is a weaker notion than cyclic_order: the renumbered tour only has to
    be magic, not a symmetry image of the original.
    """
    a = _arr(a)
    if not verifier.check_tour(a)[1]:
        raise ValueError("magic shifts are defined for closed tours only")
    return tuple(s for s in range(NCELLS) if verifier.verify(shift(a.values, s)).ortho_magic)
