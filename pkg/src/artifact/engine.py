"""Driver for the full enumeration: parents, shards, threads, checkpoints.

The work unit is a shard of canonical mod-4 parents. Shards are independent,
so they can be spread over threads (the numba kernels release the GIL) and
written to a checkpoint directory as they finish. The result does not depend
on the shard size or the thread count: the final set is expanded under all 48
cube symmetries and the complement, deduplicated and sorted.
"""
from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import lifting
from .symmetry import images

log = logging.getLogger(__name__)


def expand_orbits(arrs) -> np.ndarray:
    """Close a set of value arrays under the 48 transforms and complement; sorted, unique."""
    arrs = np.asarray(arrs, dtype=np.int64).reshape(-1, 64)
    if len(arrs) == 0:
        return arrs
    rows = [images(a) for a in arrs] + [images(65 - a) for a in arrs]
    full = np.unique(np.concatenate(rows), axis=0)
    return full


def _shard_file(ckpt, i):
    return os.path.join(ckpt, f"shard_{i:05d}.npz")


def run_shard(xs):
    t0 = time.process_time()
    arrs, counts = lifting.complete(xs)
    return arrs, counts, time.process_time() - t0


def full_enumeration(threads: int = 1, shard_size: int = 512, checkpoint: str | None = None,
                     parents: np.ndarray | None = None, progress=None):
    """Every magic tour of the cube as a sorted (n, 64) value array, plus run info."""
    t_wall = time.time()
    t_cpu = 0.0
    if parents is None:
        pfile = os.path.join(checkpoint, "parents.npy") if checkpoint else None
        if pfile and os.path.exists(pfile):
            parents = np.load(pfile)
        else:
            t0 = time.process_time()
            parents = lifting.level4_parents()
            t_cpu += time.process_time() - t0
            if pfile:
                os.makedirs(checkpoint, exist_ok=True)
                np.save(pfile, parents)
    nshards = (len(parents) + shard_size - 1) // shard_size
    shards = [parents[i * shard_size:(i + 1) * shard_size] for i in range(nshards)]
    results = [None] * nshards

    todo = []
    for i in range(nshards):
        if checkpoint and os.path.exists(_shard_file(checkpoint, i)):
            d = np.load(_shard_file(checkpoint, i))
            results[i] = (d["arrs"], float(d["cpu"]))
        else:
            todo.append(i)

    def work(i):
        arrs, counts, cpu = run_shard(shards[i])
        if checkpoint:
            tmp = _shard_file(checkpoint, i) + ".tmp.npz"
            np.savez(tmp, arrs=arrs, counts=counts, cpu=cpu, parents=shards[i])
            os.replace(tmp, _shard_file(checkpoint, i))
        return i, arrs, cpu

    done = nshards - len(todo)
    if threads <= 1:
        it = map(work, todo)
        pool = None
    else:
        pool = ThreadPoolExecutor(threads)
        it = pool.map(work, todo)
    try:
        for i, arrs, cpu in it:
            results[i] = (arrs, cpu)
            done += 1
            if progress:
                progress(done, nshards)
            log.info("shard %d/%d: %d tours, %.1fs", done, nshards, len(arrs), cpu)
    finally:
        if pool:
            pool.shutdown()

    t_cpu += sum(r[1] for r in results)
    found = [r[0] for r in results if len(r[0])]
    found = np.concatenate(found) if found else np.zeros((0, 64), np.int64)
    tours = expand_orbits(found)
    info = {
        "parents": int(len(parents)),
        "shards": nshards,
        "cpu_seconds": round(t_cpu, 1),
        "wall_seconds": round(time.time() - t_wall, 1),
        "tours": int(len(tours)),
    }
    return tours, info
