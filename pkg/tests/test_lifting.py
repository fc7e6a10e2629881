import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from artifact import lifting as Lf
from artifact.cube import LINES, NEIGHBORS, COLOR
from artifact.formats import fixtures
from artifact.symmetry import images
from artifact.search import SearchConfig, enumerate_tours


def bits(m):
    return [i for i in range(64) if int(m) >> i & 1]


def oracle_matching(A, B):
    a, b = bits(A), bits(B)
    if not a or not b:
        return 0
    w = np.array([[1 if y in NEIGHBORS[x] else 0 for y in b] for x in a])
    r, c = linear_sum_assignment(-w)
    return int(w[r, c].sum())


def canonical_parent_of(values):
    for w in np.concatenate([images(values), images(65 - values)]):
        if Lf.in_color_convention(w):
            x = Lf.parent_of(w)
            if Lf.is_canonical_parent(x, Lf.PERM_, Lf.CFLAG_):
                return x, w
    raise AssertionError("no canonical image")


def test_popcount_lowbit(rng):
    for _ in range(200):
        x = int(rng.integers(1, 2**63)) * 2 + int(rng.integers(0, 2))
        assert Lf.popcount(np.uint64(x)) == bin(x).count("1")
        assert Lf.lowbit(np.uint64(x)) == (x & -x).bit_length() - 1


def test_matching_against_assignment(rng):
    for _ in range(60):
        A = np.uint64(int(rng.integers(0, 2**63)) & int(rng.integers(0, 2**63)))
        B = np.uint64(int(rng.integers(0, 2**63)) & int(rng.integers(0, 2**63)))
        assert Lf.matching_size(A, B, Lf.NBM) == oracle_matching(A, B)


def test_box_basis_spans_even_code():
    rows = [int(b) for b in Lf.BASIS]
    # rank over GF(2)
    rank, piv = 0, []
    for r in rows:
        for p, pr in piv:
            if r >> p & 1:
                r ^= pr
        if r:
            p = (r & -r).bit_length() - 1
            piv.append((p, r))
            rank += 1
    assert rank == 27
    for b in rows:
        for L in LINES:
            assert sum(b >> int(c) & 1 for c in L) % 2 == 0


def test_required_parity_and_particular_solution(fixture_records):
    v = fixture_records[0].arrangement.values
    x, w = canonical_parent_of(v)
    cls = np.array([Lf.C0 & ~x, Lf.C1 & ~x, Lf.C0 & x, Lf.C1 & x], dtype=np.uint64)
    req = np.zeros(48, np.int64)
    assert Lf.required_parity(cls, 4, Lf.LN, req)
    # the true next bit of the tour satisfies the parities
    y_true = sum(1 << i for i in range(64) if ((w[i] - 1) >> 2) & 1)
    for L in range(48):
        assert sum(y_true >> int(c) & 1 for c in LINES[L]) % 2 == req[L]
    ok, y0 = Lf.gf2_particular(Lf.LINE_MASK, req)
    assert ok
    for L in range(48):
        assert bin(int(y0) & int(Lf.LINE_MASK[L])).count("1") % 2 == req[L]


def test_mitm_equals_dfs_step(fixture_records):
    fm, fb = Lf.fixed_bits({})
    for r in (fixture_records[0], fixture_records[2]):
        x, _ = canonical_parent_of(r.arrangement.values)
        cls = np.array([Lf.C0 & ~x, Lf.C1 & ~x, Lf.C0 & x, Lf.C1 & x], dtype=np.uint64)
        o1 = np.empty(1 << 18, np.uint64)
        o2 = np.empty(1 << 18, np.uint64)
        n1 = Lf.mitm_refine(cls, 4, 1, o1, fm, fb[2], Lf.LN, Lf.LINE_MASK, Lf.BOX, Lf.DT1, Lf.NBM)
        n2 = Lf.dfs_refine(cls, 4, 1, o2, fm, fb[2], Lf.LN, Lf.CL, Lf.DT1, Lf.DT2, Lf.NBM)
        assert n1 > 0
        assert sorted(o1[:n1].tolist()) == sorted(o2[:n2].tolist())


def test_canonical_parent_oracle(fixture_records):
    from artifact.symmetry import PERM, CFLAG
    v = fixture_records[4].arrangement.values
    x, _ = canonical_parent_of(v)
    orbit = set()
    for g in range(48):
        y = sum(1 << int(PERM[g][c]) for c in bits(x))
        if CFLAG[g]:
            y = ~y & (2**64 - 1)
        orbit.add(y)
    assert int(x) == min(orbit)


def test_complete_recovers_fixture(fixture_records):
    v = fixture_records[0].arrangement.values
    x, w = canonical_parent_of(v)
    arrs, counts = Lf.complete(np.array([x], dtype=np.uint64))
    assert counts[0] == len(arrs) == 64     # frozen from the first full run
    assert any((a == w).all() for a in arrs)
    for a in arrs:
        assert sorted(a.tolist()) == list(range(1, 65))


def test_prefix_lifting_matches_dfs(fixture_records):
    p = tuple(fixture_records[1].arrangement.path().tolist())[:20]
    cfg = SearchConfig(prefix=p)
    assert np.array_equal(enumerate_tours(cfg, engine="lifting"), enumerate_tours(cfg, engine="dfs"))


@pytest.mark.slow
def test_prefix_8_contains_tour1(tour1):
    p = tuple(tour1.path().tolist())[:8]
    res = enumerate_tours(SearchConfig(prefix=p))
    assert any((r == tour1.values).all() for r in res)
    for r in res:
        assert tuple(np.argsort(r)[:8].tolist()) == p


def test_odd_start_prefix(tour1):
    # the reversed path starts on an odd cell, so the run goes through a reflected frame
    rev = tuple(tour1.path().tolist()[::-1])[:12]
    assert COLOR[rev[0]] == 1
    res = enumerate_tours(SearchConfig(prefix=rev))
    assert any((r == 65 - tour1.values).all() for r in res)
