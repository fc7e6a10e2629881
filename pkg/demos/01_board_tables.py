"""The 4x4x4 board: cell numbering, knight moves and the line tables.

Run: python demos/01_board_tables.py
"""
import numpy as np

from artifact.cube import (coord_of, index_of, knight_adjacent, MOVES, LINES, DIAGONALS,
                           SUBCUBES, COLOR)

# cells are numbered layer by layer, row by row: idx = 16z + 4r + c
print("cell 0  ->", coord_of(0))
print("cell 63 ->", coord_of(63))
print("(1,0,0) ->", index_of((1, 0, 0)))

# a knight move changes one coordinate by 1, another by 2 and leaves the third
print("(0,0,0)-(0,1,2) knight move?", knight_adjacent(0, index_of((0, 1, 2))))
print("(0,0,0)-(1,1,1) knight move?", knight_adjacent(0, index_of((1, 1, 1))))

deg = MOVES.degree.reshape(4, 4, 4)
print("\ndegrees, layer 0:\n", deg[0])
print("degrees, layer 1:\n", deg[1])
print("degree histogram:", dict(zip(*np.unique(MOVES.degree, return_counts=True))))
print("directed knight moves on the board:", MOVES.degree.sum())

# every knight move flips the colour (z+r+c) mod 2, so tours alternate colours
assert all(COLOR[a] != COLOR[b] for a in range(64) for b in MOVES.neighbors[a])

print("\n48 orthogonal lines, e.g. the first pillar:", LINES[0].tolist(),
      " first row of layer 0:", LINES[32].tolist())
print("space diagonals:", DIAGONALS.tolist())
print("corner 2x2x2 subcubes:", len(SUBCUBES), "blocks of", SUBCUBES.shape[1])
