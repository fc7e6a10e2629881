"""Independent checks of an arrangement: tour validity, lines, diagonals, subcubes."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cube import (NCELLS, MAGIC, SUBCUBE_SUM, LINES, DIAGONALS, SUBCUBES,
                   Arrangement, knight_adjacent)


@dataclass(frozen=True)
class MagicReport:
    is_tour: bool
    is_closed: bool
    ortho_magic: bool
    line_sums: tuple
    diag_sums: tuple
    diag_magic: bool
    subcube_sums: tuple
    subcube_uniform: bool

    @property
    def is_magic_tour(self) -> bool:
        return self.is_tour and self.ortho_magic


def _arr(a) -> Arrangement:
    return a if isinstance(a, Arrangement) else Arrangement(a)


def check_tour(a) -> tuple[bool, bool]:
    """(is_tour, is_closed) computed straight from coordinates."""
    a = _arr(a)
    pos = a.positions
    for k in range(1, NCELLS):
        if not knight_adjacent(int(pos[k]), int(pos[k + 1])):
            return False, False
    return True, knight_adjacent(int(pos[NCELLS]), int(pos[1]))


def diagonal_sums(a) -> tuple:
    """D1..D4 over (i,i,i), (i,i,3-i), (i,3-i,i), (i,3-i,3-i)."""
    v = _arr(a).values
    return tuple(int(v[d].sum()) for d in DIAGONALS)


def verify(a) -> MagicReport:
    a = _arr(a)
    v = a.values
    is_tour, is_closed = check_tour(a)
    lines = tuple(int(s) for s in v[LINES].sum(axis=1))
    diags = diagonal_sums(a)
    subs = tuple(int(s) for s in v[SUBCUBES].sum(axis=1))
    return MagicReport(
        is_tour=is_tour,
        is_closed=is_closed,
        ortho_magic=all(s == MAGIC for s in lines),
        line_sums=lines,
        diag_sums=diags,
        diag_magic=all(s == MAGIC for s in diags),
        subcube_sums=subs,
        subcube_uniform=all(s == SUBCUBE_SUM for s in subs),
    )


def complement(a) -> Arrangement:
    return Arrangement(NCELLS + 1 - _arr(a).values)


def is_magic_tour(values) -> bool:
    r = verify(values)
    return r.is_tour and r.ortho_magic
