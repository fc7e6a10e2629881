"""Enumeration of magic knight tours.

Two engines sit behind :func:`enumerate`:

* an ascending path DFS (values 1, 2, ... placed along knight moves) with
  line-sum propagation, used for prefix-restricted runs with long prefixes;
* the residue-lifting engine of :mod:`artifact.lifting`, used for the full
  run and for short prefixes, where the path DFS would never finish.

Both return the same set on any restriction they can both handle, and the
result never depends on split_depth or thread_count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Optional, Sequence

import numba as nb
import numpy as np

from .cube import NCELLS, MAGIC, LINES, CELL_LINES, NEIGHBORS, NBR_MASK, COLOR, Arrangement
from . import verifier

_enumerate = enumerate   # the public enumerate() below shadows the builtin

MODES = ("all", "closed", "open")
# prefixes at least this long go to the path DFS
DFS_MIN_PREFIX = 20

_NBR = [tuple(n) for n in NEIGHBORS]
_NBM = [int(m) for m in NBR_MASK]
_CL = [tuple(int(x) for x in row) for row in CELL_LINES]
_LINES = [tuple(int(x) for x in row) for row in LINES]


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "all"
    start_cells: Optional[tuple] = None      # None means all 64
    split_depth: int = 4
    prefix: Optional[tuple] = None           # cells holding 1, 2, ..., len(prefix)
    thread_count: int = 1
    p3: bool = False                         # dead-end check
    warnsdorff: bool = False                 # candidate ordering only

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.prefix is not None:
            object.__setattr__(self, "prefix", tuple(int(c) for c in self.prefix))
        if self.start_cells is not None:
            object.__setattr__(self, "start_cells", tuple(sorted(set(int(c) for c in self.start_cells))))

    def starts(self) -> tuple:
        return tuple(range(NCELLS)) if self.start_cells is None else self.start_cells


class Contradiction(Exception):
    pass


class SearchState:
    """Partial tour: values 1..k placed, line bookkeeping and forced values.

    forced_value[c] is the value a still empty cell must take (0 if free);
    forced_cell[v] is the cell value v must go to (-1 if free).
    """

    __slots__ = ("path", "occupied", "line_count", "line_sum", "forced_value", "forced_cell")

    def __init__(self):
        self.path = []
        self.occupied = 0
        self.line_count = [0] * 48
        self.line_sum = [0] * 48
        self.forced_value = [0] * NCELLS
        self.forced_cell = [-1] * (NCELLS + 2)

    @property
    def k(self) -> int:
        return len(self.path)

    def copy(self) -> "SearchState":
        s = SearchState.__new__(SearchState)
        s.path = self.path[:]
        s.occupied = self.occupied
        s.line_count = self.line_count[:]
        s.line_sum = self.line_sum[:]
        s.forced_value = self.forced_value[:]
        s.forced_cell = self.forced_cell[:]
        return s

    def values(self) -> np.ndarray:
        v = np.zeros(NCELLS, dtype=np.int64)
        for i, c in _enumerate(self.path):
            v[c] = i + 1
        return v


def _force(state: SearchState, cell: int, value: int):
    if state.forced_value[cell] == value:
        return
    if state.forced_value[cell] or state.forced_cell[value] >= 0:
        raise Contradiction
    state.forced_value[cell] = value
    state.forced_cell[value] = cell


def _check_line(state: SearchState, L: int, k: int):
    """P1/P2 on one line once value k is the last placed."""
    n = state.line_count[L]
    rest = MAGIC - state.line_sum[L]
    e = 4 - n
    if e == 0:
        if rest != 0:
            raise Contradiction
        return
    # unplaced values form the interval k+1..64
    lo = e * (k + 1) + e * (e - 1) // 2
    hi = e * NCELLS - e * (e - 1) // 2
    if not lo <= rest <= hi:
        raise Contradiction
    if e == 1:
        for c in _LINES[L]:
            if not (state.occupied >> c) & 1:
                _force(state, c, rest)
                return


def propagate(state: SearchState, cell: int, value: int, mode: str = "all", p3: bool = False) -> SearchState:
    """Place value at cell on a copy of state; raise Contradiction if pruned."""
    k = state.k
    if value != k + 1 or (state.occupied >> cell) & 1:
        raise ValueError("propagate expects the next value on an empty cell")
    if k and cell not in _NBR[state.path[-1]]:
        raise Contradiction
    fv = state.forced_value[cell]
    if fv and fv != value:
        raise Contradiction
    fc = state.forced_cell[value]
    if fc >= 0 and fc != cell:
        raise Contradiction
    s = state.copy()
    s.path.append(cell)
    s.occupied |= 1 << cell
    if fv:
        s.forced_value[cell] = 0
        s.forced_cell[value] = -1
    for L in _CL[cell]:
        s.line_count[L] += 1
        s.line_sum[L] += value
    for L in _CL[cell]:
        _check_line(s, L, value)
    free = ~s.occupied & ((1 << NCELLS) - 1)
    if value < NCELLS:
        nxt = s.forced_cell[value + 1]
        if nxt >= 0 and nxt not in _NBR[cell]:
            raise Contradiction
        if not _NBM[cell] & free:
            raise Contradiction
    if mode == "closed":
        start = s.path[0]
        if value == NCELLS:
            if start not in _NBR[cell]:
                raise Contradiction
        elif value > 1 and not (_NBM[start] & free):
            last = s.forced_cell[NCELLS]
            if last < 0 or start not in _NBR[last]:
                raise Contradiction
    elif mode == "open" and value == NCELLS:
        if s.path[0] in _NBR[cell]:
            raise Contradiction
    if p3 and value < NCELLS - 1:
        # a free cell with no free neighbour can only be the final cell
        ends = 0
        m = free
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            if not _NBM[c] & free & ~(1 << c) and c not in _NBR[cell]:
                ends += 1
                if ends > 1:
                    raise Contradiction
    return s


def initial_state(config: SearchConfig):
    """State after the config's prefix, or None if the prefix is already pruned."""
    s = SearchState()
    if config.prefix:
        if config.prefix[0] not in config.starts():
            return None
        try:
            for i, c in _enumerate(config.prefix):
                if not 0 <= c < NCELLS or (s.occupied >> c) & 1:
                    return None
                s = propagate(s, c, i + 1, config.mode, config.p3)
        except Contradiction:
            return None
    return s


def _candidates(state: SearchState, config: SearchConfig):
    if state.k == 0:
        return list(config.starts())
    cands = [c for c in _NBR[state.path[-1]] if not (state.occupied >> c) & 1]
    if config.warnsdorff:
        free = ~(state.occupied) & ((1 << NCELLS) - 1)
        cands.sort(key=lambda c: (bin(_NBM[c] & free).count("1"), c))
    return cands


def _children(state: SearchState, config: SearchConfig):
    for c in _candidates(state, config):
        try:
            yield propagate(state, c, state.k + 1, config.mode, config.p3)
        except Contradiction:
            continue


def dfs(state: SearchState, config: SearchConfig) -> Iterator[np.ndarray]:
    """Pruned DFS below state; yields value arrays of complete magic tours."""
    if state is None:
        return
    stack = [state]
    while stack:
        s = stack.pop()
        if s.k == NCELLS:
            yield s.values()
            continue
        kids = list(_children(s, config))
        stack.extend(reversed(kids))


_NBL = np.full((NCELLS, 12), -1, dtype=np.int64)
for _i, _n in _enumerate(NEIGHBORS):
    _NBL[_i, :len(_n)] = _n


@nb.njit(cache=True)
def _naive_kernel(prefix, NBL, LN, out):
    # plain path enumeration; line sums checked only on complete paths
    U = np.uint64
    path = np.zeros(64, np.int64)
    k = prefix.shape[0]
    used = U(0)
    for i in range(k):
        path[i] = prefix[i]
        used |= U(1) << U(prefix[i])
    it = np.zeros(65, np.int64)
    vals = np.zeros(64, np.int64)
    d = k
    nsol = 0
    nodes = 0
    while d >= k:
        if d == 64:
            for i in range(64):
                vals[path[i]] = i + 1
            ok = True
            for L in range(48):
                s = 0
                for j in range(4):
                    s += vals[LN[L, j]]
                if s != 130:
                    ok = False
                    break
            if ok:
                if nsol < out.shape[0]:
                    out[nsol, :] = vals
                nsol += 1
            d -= 1
            used &= ~(U(1) << U(path[d]))
            continue
        j = it[d]
        if j >= 12 or NBL[path[d - 1], j] < 0:
            d -= 1
            if d >= k:
                used &= ~(U(1) << U(path[d]))
            continue
        it[d] = j + 1
        c = NBL[path[d - 1], j]
        if (used >> U(c)) & U(1):
            continue
        nodes += 1
        path[d] = c
        used |= U(1) << U(c)
        d += 1
        it[d] = 0
    return nsol, nodes


def naive_dfs(prefix: Sequence[int], mode: str = "all") -> np.ndarray:
    """Unpruned oracle: every knight-path completion of prefix with all line sums 130.

    No propagation at all; the cost grows like the number of self-avoiding
    knight paths, so only long prefixes are practical.
    """
    prefix = [int(c) for c in prefix]
    if not prefix or len(set(prefix)) != len(prefix):
        raise ValueError("naive_dfs needs a non-empty prefix without repeats")
    for i in range(1, len(prefix)):
        if prefix[i] not in _NBR[prefix[i - 1]]:
            return np.zeros((0, NCELLS), dtype=np.int64)
    if len(prefix) == NCELLS:
        found = [Arrangement.from_path(prefix).values]
        found = [v for v in found if verifier.verify(v).ortho_magic]
    else:
        out = np.zeros((4096, NCELLS), dtype=np.int64)
        n, _ = _naive_kernel(np.array(prefix, dtype=np.int64), _NBL, np.asarray(LINES), out)
        if n > len(out):
            raise RuntimeError("naive_dfs buffer overflow")
        found = list(out[:n])
    found = [v for v in found if _mode_ok(v, mode)]
    return _sorted_unique(found)


def split_frontier(config: SearchConfig) -> list:
    """Configs whose prefixes extend config's prefix by split_depth moves.

    With no prefix the frontier starts from the chosen start cells, so
    split_depth=1 gives one config per surviving (start, first move) pair.
    Configs whose prefix dies under propagation are dropped; the result sets
    of the returned configs are disjoint and their union is config's.
    """
    root = initial_state(config)
    if root is None:
        return []
    depth = config.split_depth + (0 if config.prefix else 1)
    frontier = [root]
    for _ in range(depth):
        nxt = []
        for s in frontier:
            if s.k == NCELLS:
                nxt.append(s)
            else:
                nxt.extend(_children(s, config))
        frontier = nxt
    return [replace(config, prefix=tuple(s.path), split_depth=0) for s in frontier]


def _sorted_unique(arrs) -> np.ndarray:
    arrs = [np.asarray(a, dtype=np.int64) for a in arrs]
    if not arrs:
        return np.zeros((0, NCELLS), dtype=np.int64)
    return np.unique(np.stack(arrs), axis=0)


def _mode_ok(values, mode) -> bool:
    if mode == "all":
        return True
    _, closed = verifier.check_tour(values)
    return closed == (mode == "closed")


def _lifting_run(config: SearchConfig, threads: int) -> np.ndarray:
    from . import lifting, engine, symmetry
    prefix = config.prefix or ()
    if not prefix:
        tours, _ = engine.full_enumeration(threads=threads)
    else:
        # work in the colour convention: value 1 on a colour-0 cell
        g = 0 if COLOR[prefix[0]] == 0 else 1
        assert symmetry.CFLAG[g] == (COLOR[prefix[0]] == 1)
        perm = symmetry.PERM[g]
        fixed = {int(perm[c]): i + 1 for i, c in _enumerate(prefix)}
        parents = lifting.level4_parents(canonical=False, fixed=fixed)
        shards = np.array_split(parents, max(1, min(len(parents), 8 * threads)))
        run = lambda xs: lifting.complete(xs, fixed=fixed)[0]
        if threads > 1:
            with ThreadPoolExecutor(threads) as pool:
                parts = list(pool.map(run, shards))
        else:
            parts = [run(xs) for xs in shards]
        found = np.concatenate(parts) if parts else np.zeros((0, NCELLS), np.int64)
        tours = found[:, perm] if len(found) else found
    starts = set(config.starts())
    rows = []
    for t in tours:
        path = np.argsort(t)
        if int(path[0]) not in starts:
            continue
        if prefix and tuple(int(c) for c in path[:len(prefix)]) != tuple(prefix):
            continue
        if not _mode_ok(t, config.mode):
            continue
        rows.append(t)
    return _sorted_unique(rows)


def _dfs_run(config: SearchConfig, threads: int) -> np.ndarray:
    if threads <= 1 and config.split_depth <= 0:
        return _sorted_unique(dfs(initial_state(config), config))
    parts = split_frontier(config) if config.split_depth > 0 else [config]
    work = lambda c: list(dfs(initial_state(c), c))
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            res = list(pool.map(work, parts))
    else:
        res = [work(c) for c in parts]
    return _sorted_unique([a for r in res for a in r])


def enumerate_tours(config: SearchConfig, engine: str = "auto") -> np.ndarray:
    """Sorted (n, 64) array of every magic tour matching config.

    engine: "dfs", "lifting" or "auto" (DFS for prefixes of at least
    DFS_MIN_PREFIX cells, lifting otherwise).
    """
    if config.prefix is not None and initial_state(config) is None:
        return np.zeros((0, NCELLS), dtype=np.int64)
    if engine == "auto":
        engine = "dfs" if config.prefix and len(config.prefix) >= DFS_MIN_PREFIX else "lifting"
    threads = max(1, int(config.thread_count))
    if engine == "dfs":
        return _dfs_run(config, threads)
    if engine == "lifting":
        return _lifting_run(config, threads)
    raise ValueError(f"unknown engine {engine!r}")


def enumerate(config: SearchConfig, engine: str = "auto") -> Iterator[Arrangement]:
    """Stream of Arrangements, in sorted order, matching config."""
    for v in enumerate_tours(config, engine):
        yield Arrangement(v)
