import itertools

import numpy as np
from hypothesis import given, settings, strategies as st

from artifact.cube import Arrangement, coord_of, index_of
from artifact import symmetry as S
from artifact.verifier import verify, complement


def oracle_map(perm, flips):
    # direct coordinate formula, independent of CubeTransform
    out = []
    for i in range(64):
        q = coord_of(i)
        y = [q[perm[a]] for a in range(3)]
        y = [3 - y[a] if flips >> a & 1 else y[a] for a in range(3)]
        out.append(index_of(y))
    return out


def test_48_distinct_transforms():
    assert len(S.TRANSFORMS) == 48
    maps = {tuple(S.PERM[g]) for g in range(48)}
    assert len(maps) == 48
    expected = {tuple(oracle_map(p, f)) for p in itertools.permutations(range(3)) for f in range(8)}
    assert maps == expected


def test_group_axioms():
    ident = [g for g in range(48) if (S.PERM[g] == np.arange(64)).all()]
    assert ident == [S.IDENTITY]
    for g in range(48):
        for h in range(48):
            k = S.compose(g, h)
            assert (S.PERM[k] == S.PERM[g][S.PERM[h]]).all()
        gi = S.inverse(g)
        assert S.compose(g, gi) == S.IDENTITY == S.compose(gi, g)


def test_transforms_map_lines_to_lines():
    from artifact.cube import LINES, DIAGONALS, SUBCUBES
    for fam in (LINES, DIAGONALS, SUBCUBES):
        sets = {frozenset(x.tolist()) for x in fam}
        for g in range(48):
            assert {frozenset(S.PERM[g][x].tolist()) for x in fam} == sets


def test_apply_identity_and_inverse(tour1):
    assert S.apply(S.IDENTITY, tour1) == tour1
    for g in range(48):
        assert S.apply(g, S.apply(S.inverse(g), tour1)) == tour1


def test_magic_invariance_on_fixtures(fixture_records):
    for r in fixture_records:
        a = r.arrangement
        base = verify(a)
        for g in range(48):
            rep = verify(S.apply(g, a))
            assert rep.ortho_magic and rep.is_tour and rep.is_closed
            assert sorted(rep.line_sums) == sorted(base.line_sums)
            assert sorted(rep.diag_sums) == sorted(base.diag_sums)
        c = complement(a)
        assert complement(c) == a and verify(c).ortho_magic


def test_tour1_images_diag_magic(tour1):
    assert all(verify(S.apply(g, tour1)).diag_magic for g in range(48))


@settings(max_examples=100, deadline=None)
@given(st.permutations(list(range(1, 65))), st.integers(0, 47))
def test_frenicle_invariance(vals, g):
    a = Arrangement(vals)
    k = S.frenicle_canonical(a)
    assert S.frenicle_canonical(S.apply(g, a)) == k
    assert S.frenicle_canonical(Arrangement(k)) == k


def test_frenicle_key_is_min_image(tour1):
    imgs = sorted(tuple(S.apply(g, tour1).values.tolist()) for g in range(48))
    assert S.frenicle_canonical(tour1) == imgs[0]


def test_tours_1_2_differ(fixture_records):
    a, b = fixture_records[0].arrangement, fixture_records[1].arrangement
    assert S.frenicle_canonical(a) != S.frenicle_canonical(b)


def test_primary_key(tour1):
    k = S.primary_canonical(tour1)
    assert S.primary_canonical(complement(tour1)) == k
    for s in range(64):
        v = (tour1.values - 1 + s) % 64 + 1
        assert S.primary_canonical(Arrangement(v)) == k
    assert S.primary_canonical(S.apply(7, tour1)) == k


def test_primary_rejects_non_tour():
    import pytest
    with pytest.raises(ValueError):
        S.primary_canonical(Arrangement(np.arange(1, 65)))


def test_census_on_fixture_orbits(fixture_records, rng):
    stream = []
    for r in fixture_records:
        a = r.arrangement
        stream += [S.apply(g, a) for g in range(0, 48, 5)] + [complement(a)]
    c1 = S.build_census(stream)
    order = rng.permutation(len(stream))
    c2 = S.build_census([stream[i] for i in order])
    assert c1 == c2
    assert c1.frenicle_total == c1.frenicle_closed + c1.frenicle_open
    assert c1.primary_total == c1.primary_closed + c1.primary_open
    # each fixture and its complement; 1/2, 3/4 and 5..8 pairs are distinct paths
    assert c1.frenicle_open == 0
    assert c1.diag_magic_frenicle >= 1
