"""Checks on the stored result of the full enumeration."""
import json

import numpy as np
import pytest

from artifact import symmetry as S
from artifact.census import load_census_tours, save_census_tours
from artifact.cli import main
from artifact.cube import Arrangement
from artifact.formats import fixtures
from artifact.verifier import check_tour


@pytest.fixture(scope="module")
def stored():
    return load_census_tours()


def test_stored_rows_are_unique_permutations(stored):
    tours, info = stored
    assert tours.shape[1] == 64 and len(tours) == info["tours"]
    assert (np.sort(tours, axis=1) == np.arange(1, 65)).all()
    assert len(np.unique(tours, axis=0)) == len(tours)


def test_fixtures_are_in_census(stored):
    tours = stored[0]
    rows = {r.tobytes() for r in tours}
    for r in fixtures():
        assert r.arrangement.values.astype(np.int64).tobytes() in rows


def test_stored_set_closed_under_symmetry_and_complement(stored):
    tours = stored[0]
    rows = {r.tobytes() for r in tours}
    rng = np.random.default_rng(7)
    for i in rng.choice(len(tours), 40, replace=False):
        imgs = S.images(tours[i])
        assert all(r.astype(np.int64).tobytes() in rows for r in imgs)
        assert (65 - tours[i]).tobytes() in rows


def test_save_load_roundtrip(tmp_path, stored):
    tours, info = stored
    f = tmp_path / "c.npz"
    save_census_tours(tours[:100], info, str(f))
    t2, i2 = load_census_tours(str(f))
    assert np.array_equal(t2, tours[:100]) and i2 == info


def _components_by_magic_renumbering(tours):
    """Independent primary grouping: union Frenicle classes linked by a renumbering.

    Only renumberings that land inside the stored set can link classes, so
    this walks shifts and reversal directly instead of taking lexmin keys.
    Returns {root: is_closed}.
    """
    fkey = {v.tobytes(): S.frenicle_canonical(v) for v in tours}
    parent = {k: k for k in fkey.values()}

    def find(k):
        while parent[k] != k:
            k = parent[k]
        return k

    for v in tours:
        k = fkey[v.tobytes()]
        for base in (v, 65 - v):
            for s in range(64):
                b = ((base - 1 + s) % 64 + 1).tobytes()
                if b in fkey:
                    parent[find(k)] = find(fkey[b])
    return {find(k): check_tour(Arrangement(k))[1] for k in parent}


def test_cli_census_cached(capsys, stored):
    assert main(["census", "--cached"]) == 0
    c = json.loads(capsys.readouterr().out)["census"]
    assert (c["frenicle_total"], c["frenicle_closed"], c["frenicle_open"]) == (216, 188, 28)
    roots = _components_by_magic_renumbering(stored[0])
    assert c["primary_total"] == len(roots)
    assert c["primary_closed"] == sum(roots.values())
    assert c["primary_open"] == len(roots) - sum(roots.values())
