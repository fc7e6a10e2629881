"""Full census: run the enumeration or load its stored result.

The stored file holds every magic tour found by the full run (all symmetry
images and both numbering directions) together with the run statistics, so
the census can be rebuilt and re-verified without rerunning the search.
"""
from __future__ import annotations

import json
import os

import numpy as np

from . import engine

DATA_FILE = os.path.join(os.path.dirname(__file__), "data", "census_tours.npz")


def run_census(threads: int = 1, checkpoint: str | None = None):
    return engine.full_enumeration(threads=threads, checkpoint=checkpoint)


def save_census_tours(tours, info, path: str = DATA_FILE):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    np.savez_compressed(path, tours=np.asarray(tours, dtype=np.uint8), info=json.dumps(info))


def load_census_tours(path: str = DATA_FILE):
    if not os.path.exists(path):
        raise FileNotFoundError(f"no stored census at {path}; run 'census' without --cached")
    d = np.load(path)
    return d["tours"].astype(np.int64), json.loads(str(d["info"]))
