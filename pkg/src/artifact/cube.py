"""Geometry of the 4x4x4 board: coordinates, knight moves and incidence tables.

Cells are numbered idx = 16*z + 4*r + c, so z is the layer, r the row inside a
printed layer block and c the column. All tables are plain numpy arrays built
once at import time and never mutated afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

N = 4
NCELLS = 64
MAGIC = 130
SUBCUBE_SUM = 260


class Coord(NamedTuple):
    z: int
    r: int
    c: int


def coord_of(i: int) -> Coord:
    if not 0 <= i < NCELLS:
        raise ValueError(f"cell index out of range: {i}")
    return Coord(i >> 4, (i >> 2) & 3, i & 3)


def index_of(q) -> int:
    z, r, c = q
    for v in (z, r, c):
        if not 0 <= v < N:
            raise ValueError(f"coordinate out of range: {tuple(q)}")
    return 16 * z + 4 * r + c


def knight_adjacent(a: int, b: int) -> bool:
    """True iff the displacement multiset between a and b is {0, 1, 2}."""
    pa, pb = coord_of(a), coord_of(b)
    return sorted(abs(x - y) for x, y in zip(pa, pb)) == [0, 1, 2]


@dataclass(frozen=True)
class MoveTable:
    neighbors: tuple      # tuple of sorted tuples of cell indexes
    masks: np.ndarray     # uint64 bitmask of neighbours per cell
    degree: np.ndarray


@dataclass(frozen=True)
class LineTable:
    ortho_lines: np.ndarray   # (48, 4): pillars, then columns, then rows
    diagonals: np.ndarray     # (4, 4): D1..D4
    subcubes: np.ndarray      # (8, 8)
    lines_of_cell: np.ndarray  # (64, 3), one line per axis


def _moves():
    steps = set()
    for perm in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        for sr in (1, -1):
            for sc in (1, -1):
                d = [0, 0, 0]
                d[perm[1]] = sr * 1
                d[perm[2]] = sc * 2
                steps.add(tuple(d))
    return sorted(steps)


def build_tables() -> tuple[MoveTable, LineTable]:
    steps = _moves()
    nbrs = []
    for i in range(NCELLS):
        z, r, c = coord_of(i)
        out = []
        for dz, dr, dc in steps:
            q = (z + dz, r + dr, c + dc)
            if all(0 <= v < N for v in q):
                out.append(index_of(q))
        nbrs.append(tuple(sorted(out)))
    masks = np.array([sum(1 << j for j in nb) for nb in nbrs], dtype=np.uint64)
    degree = np.array([len(nb) for nb in nbrs], dtype=np.int64)

    lines = []
    for r in range(N):
        for c in range(N):
            lines.append([index_of((z, r, c)) for z in range(N)])
    for z in range(N):
        for c in range(N):
            lines.append([index_of((z, r, c)) for r in range(N)])
    for z in range(N):
        for r in range(N):
            lines.append([index_of((z, r, c)) for c in range(N)])
    lines = np.array(lines, dtype=np.int64)

    t = range(N)
    diags = np.array([
        [index_of((i, i, i)) for i in t],
        [index_of((i, i, 3 - i)) for i in t],
        [index_of((i, 3 - i, i)) for i in t],
        [index_of((i, 3 - i, 3 - i)) for i in t],
    ], dtype=np.int64)

    subs = []
    for z0 in (0, 2):
        for r0 in (0, 2):
            for c0 in (0, 2):
                subs.append(sorted(index_of((z0 + a, r0 + b, c0 + d))
                                   for a in (0, 1) for b in (0, 1) for d in (0, 1)))
    subs = np.array(subs, dtype=np.int64)

    loc = np.zeros((NCELLS, 3), dtype=np.int64)
    for li, line in enumerate(lines):
        for cell in line:
            loc[cell, li // 16] = li

    for arr in (masks, degree, lines, diags, subs, loc):
        arr.setflags(write=False)
    return MoveTable(tuple(nbrs), masks, degree), LineTable(lines, diags, subs, loc)


MOVES, LINES_T = build_tables()
NBR_MASK = MOVES.masks
LINES = LINES_T.ortho_lines
DIAGONALS = LINES_T.diagonals
SUBCUBES = LINES_T.subcubes
CELL_LINES = LINES_T.lines_of_cell
COORDS = np.array([coord_of(i) for i in range(NCELLS)], dtype=np.int64)
# parity colouring; every knight move flips it
COLOR = COORDS.sum(axis=1) % 2
NEIGHBORS = MOVES.neighbors


class Arrangement:
    """Values 1..64 placed on the 64 cells.

    ``values[i]`` is the number written in cell i and ``positions[v]`` is the
    cell holding v (index 0 unused).
    """

    __slots__ = ("values", "positions")

    def __init__(self, values):
        v = np.asarray(values, dtype=np.int64).reshape(-1)
        if v.shape != (NCELLS,):
            raise ValueError(f"expected 64 values, got {v.size}")
        if sorted(v.tolist()) != list(range(1, NCELLS + 1)):
            raise ValueError("values are not a permutation of 1..64")
        v = v.copy()
        v.setflags(write=False)
        pos = np.zeros(NCELLS + 1, dtype=np.int64)
        pos[v] = np.arange(NCELLS)
        pos.setflags(write=False)
        self.values = v
        self.positions = pos

    @classmethod
    def from_path(cls, path):
        """Build from the cell sequence holding 1, 2, ..., 64."""
        path = list(path)
        if sorted(path) != list(range(NCELLS)):
            raise ValueError("path must visit each of the 64 cells once")
        vals = np.zeros(NCELLS, dtype=np.int64)
        vals[path] = np.arange(1, NCELLS + 1)
        return cls(vals)

    def path(self) -> np.ndarray:
        return self.positions[1:]

    def key(self) -> tuple:
        return tuple(self.values.tolist())

    def __eq__(self, other):
        return isinstance(other, Arrangement) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return f"Arrangement({self.values[:8].tolist()}...)"
