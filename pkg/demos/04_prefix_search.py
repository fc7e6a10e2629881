"""Searching for magic tours that extend a fixed opening.

Long openings go to the pruned path search, short ones to the parity
lifting engine. Both return the same sorted array of value grids.

Run: python demos/04_prefix_search.py
"""
import time

import numpy as np

from artifact.formats import fixtures
from artifact.search import SearchConfig, enumerate_tours, naive_dfs, split_frontier
from artifact.verifier import verify

tour = fixtures()[0].arrangement
path = tuple(tour.path().tolist())

for n, engine in ((24, "dfs"), (20, "dfs"), (20, "lifting"), (14, "lifting")):
    t0 = time.time()
    found = enumerate_tours(SearchConfig(prefix=path[:n]), engine=engine)
    ok = all(verify(v).ortho_magic for v in found)
    has_t1 = any((v == tour.values).all() for v in found)
    print(f"prefix {n:2d} via {engine:7s}: {len(found):3d} tours, all verified={ok}, "
          f"tour 1 among them={has_t1}  ({time.time() - t0:.1f}s)")

# the unpruned reference search gives the same answer on long openings
p = path[:44]
print("\npruned == naive at prefix 44:",
      np.array_equal(enumerate_tours(SearchConfig(prefix=p), engine="dfs"), naive_dfs(p)))

# splitting the work: each config is an independent subtree
parts = split_frontier(SearchConfig(prefix=path[:20], split_depth=2))
print(f"split depth 2 below a 20-cell opening -> {len(parts)} subtrees")

# open tours only
found = enumerate_tours(SearchConfig(mode="open", prefix=path[:20]))
print("open tours extending tour 1's first 20 cells:", len(found))
