import itertools

import numpy as np
import pytest

from artifact.cube import (Arrangement, Coord, coord_of, index_of, knight_adjacent, build_tables,
                           LINES, SUBCUBES, DIAGONALS, CELL_LINES, NBR_MASK)


def brute_neighbours(i):
    # oracle: all signed permutations of (0, 1, 2), kept when in bounds
    z, r, c = coord_of(i)
    out = set()
    for p in itertools.permutations((0, 1, 2)):
        for sg in itertools.product((1, -1), repeat=3):
            q = (z + sg[0] * p[0], r + sg[1] * p[1], c + sg[2] * p[2])
            if all(0 <= t < 4 for t in q):
                out.add(index_of(q))
    return out


def test_coord_examples():
    assert coord_of(0) == Coord(0, 0, 0)
    assert coord_of(63) == Coord(3, 3, 3)
    assert index_of((1, 0, 0)) == 16


def test_coord_roundtrip():
    assert all(index_of(coord_of(i)) == i for i in range(64))


@pytest.mark.parametrize("bad", [-1, 64, 100])
def test_coord_out_of_range(bad):
    with pytest.raises(ValueError):
        coord_of(bad)


def test_index_out_of_range():
    with pytest.raises(ValueError):
        index_of((0, 4, 0))


def test_adjacency_examples():
    assert knight_adjacent(index_of((0, 0, 0)), index_of((0, 1, 2)))
    assert not knight_adjacent(index_of((0, 0, 0)), index_of((1, 1, 1)))


def test_move_table_matches_oracle():
    moves, _ = build_tables()
    for a in range(64):
        assert set(moves.neighbors[a]) == brute_neighbours(a)
        assert list(moves.neighbors[a]) == sorted(moves.neighbors[a])
        assert int(NBR_MASK[a]) == sum(1 << b for b in brute_neighbours(a))
        for b in range(64):
            assert knight_adjacent(a, b) == (b in moves.neighbors[a])


def test_adjacency_symmetric_no_loops():
    moves, _ = build_tables()
    for a in range(64):
        assert a not in moves.neighbors[a]
        for b in moves.neighbors[a]:
            assert a in moves.neighbors[b]


def test_degrees():
    moves, _ = build_tables()
    assert moves.degree[index_of((0, 0, 0))] == 6
    total = sum(len(brute_neighbours(i)) for i in range(64))
    assert moves.degree.sum() == total == 576   # frozen from the brute-force oracle


def test_line_families_partition():
    for axis in range(3):
        fam = LINES[16 * axis:16 * (axis + 1)]
        assert sorted(fam.reshape(-1).tolist()) == list(range(64))
        for L in fam:
            coords = np.array([coord_of(c) for c in L])
            fixed = [len(set(coords[:, k])) == 1 for k in range(3)]
            assert sum(fixed) == 2 and not fixed[axis]


def test_subcubes_and_diagonals():
    assert sorted(SUBCUBES.reshape(-1).tolist()) == list(range(64))
    on_diag = np.zeros(64, int)
    for d in DIAGONALS:
        on_diag[d] += 1
    assert set(on_diag.tolist()) <= {0, 1}
    assert DIAGONALS[0].tolist() == [index_of((i, i, i)) for i in range(4)]


def test_lines_of_cell():
    for c in range(64):
        assert len(CELL_LINES[c]) == 3
        for L in CELL_LINES[c]:
            assert c in LINES[L]


def test_arrangement_validation():
    with pytest.raises(ValueError):
        Arrangement(list(range(64)))
    with pytest.raises(ValueError):
        Arrangement([1] * 64)
    a = Arrangement(np.arange(64, 0, -1))
    assert all(a.positions[a.values[i]] == i for i in range(64))
    assert a.values.sum() == 2080
