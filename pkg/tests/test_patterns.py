import numpy as np
import pytest

from artifact.cube import Arrangement, index_of
from artifact.formats import fixtures
from artifact.patterns import classify_pattern, cyclic_order, magic_shifts, quad_report, shift, SQUARES_AND_DIAMONDS, IRREGULAR
from artifact.symmetry import apply
from artifact.verifier import complement, check_tour


def test_tour1_first_quad(tour1):
    q = quad_report(tour1).quads[0]
    assert q.cells == (index_of((0, 0, 0)), index_of((1, 0, 2)), index_of((0, 2, 2)), index_of((1, 2, 0)))
    assert q.is_cycle


def test_quads_partition(tour1):
    rep = quad_report(tour1)
    cells = [c for q in rep.quads for c in q.cells]
    assert sorted(cells) == list(range(64))
    vals = sorted(int(tour1.values[c]) for c in cells)
    assert vals == list(range(1, 65))


def test_open_chain_quad_not_cycle():
    rep = quad_report(Arrangement(np.arange(1, 65)))
    assert not rep.quads[0].is_cycle      # cells 0,1,2,3: closing displacement (0,0,3)


def test_pattern_invariance(fixture_records):
    for r in fixture_records:
        a = r.arrangement
        kind = classify_pattern(a)[1]
        assert kind in (SQUARES_AND_DIAMONDS, IRREGULAR)
        assert classify_pattern(complement(a))[1] == kind
        for g in range(48):
            assert classify_pattern(apply(g, a))[1] == kind


def test_pattern_rejects_non_tour():
    with pytest.raises(ValueError):
        classify_pattern(Arrangement(np.arange(1, 65)))


def test_cyclic_order_properties(fixture_records):
    for r in fixture_records:
        a = r.arrangement
        d = cyclic_order(a)
        assert 64 % d == 0 and d >= 1
        for g in (1, 17, 40):
            assert cyclic_order(apply(g, a)) == d


def test_cyclic_order_of_tour5(fixture_records):
    # shifting tour 5 by 32 lands on a symmetry image: frozen from a direct run
    assert cyclic_order(fixture_records[4].arrangement) == 2


def test_shift_keeps_closed(tour1):
    assert check_tour(Arrangement(shift(tour1.values, 16))) == (True, True)


def test_magic_shifts_fixtures():
    # frozen from a set-membership check against the stored census
    got = [magic_shifts(r.arrangement) for r in fixtures()]
    assert got == [(0, 16, 32, 48)] * 4 + [(0, 32)] * 4


def test_magic_shifts_rejects_open():
    with pytest.raises(ValueError):
        magic_shifts(Arrangement(np.arange(1, 65)))
