"""The 48 rotations/reflections of the cube, canonical forms and the census.

A transform is an axis permutation plus a flip bit per axis. Frenicle classes
quotient arrangements by these 48 maps only; primary classes additionally
quotient the renumberings of the same knight path (cyclic shifts and reversal
for closed tours, reversal only for open ones).
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .cube import NCELLS, COORDS, Arrangement, index_of
from . import verifier


@dataclass(frozen=True)
class CubeTransform:
    perm: tuple   # output axis a takes input component perm[a]
    flips: int    # bit a set: output component a is mapped t -> 3 - t

    def apply_coord(self, q):
        out = [q[self.perm[a]] for a in range(3)]
        return tuple(3 - out[a] if (self.flips >> a) & 1 else out[a] for a in range(3))

    def cell_map(self) -> np.ndarray:
        return np.array([index_of(self.apply_coord(tuple(COORDS[i]))) for i in range(NCELLS)],
                        dtype=np.int64)

    @property
    def swaps_color(self) -> bool:
        # z+r+c changes parity once per flipped axis
        return bin(self.flips).count("1") % 2 == 1


TRANSFORMS = [CubeTransform(p, f) for p in itertools.permutations(range(3)) for f in range(8)]
IDENTITY = 0
PERM = np.array([g.cell_map() for g in TRANSFORMS], dtype=np.int64)   # PERM[g, i] = g(i)
INVERSE_PERM = np.argsort(PERM, axis=1)
CFLAG = np.array([g.swaps_color for g in TRANSFORMS], dtype=np.int64)
for _a in (PERM, INVERSE_PERM, CFLAG):
    _a.setflags(write=False)

_PERM_INDEX = {PERM[g].tobytes(): g for g in range(len(TRANSFORMS))}


def compose(g: int, h: int) -> int:
    """Index of the transform 'g after h'."""
    return _PERM_INDEX[PERM[g][PERM[h]].tobytes()]


def inverse(g: int) -> int:
    return _PERM_INDEX[INVERSE_PERM[g].tobytes()]


def _values(a) -> np.ndarray:
    return a.values if isinstance(a, Arrangement) else np.asarray(a, dtype=np.int64)


def apply(g: int, a: Arrangement) -> Arrangement:
    out = np.empty(NCELLS, dtype=np.int64)
    out[PERM[g]] = _values(a)
    return Arrangement(out)


def images(values) -> np.ndarray:
    """All 48 transformed value arrays, shape (48, 64)."""
    v = np.asarray(values, dtype=np.int64)
    out = np.empty((len(TRANSFORMS), NCELLS), dtype=np.int64)
    rows = np.arange(len(TRANSFORMS))[:, None]
    out[rows, PERM] = v[None, :]
    return out


def lexmin(rows: np.ndarray) -> np.ndarray:
    """Lexicographically smallest row of a 2-D integer array."""
    cand = np.arange(rows.shape[0])
    for col in range(rows.shape[1]):
        vals = rows[cand, col]
        cand = cand[vals == vals.min()]
        if cand.size == 1:
            break
    return rows[cand[0]].copy()


def frenicle_canonical(a) -> tuple:
    return tuple(lexmin(images(_values(a))).tolist())


def renumberings(a: Arrangement, closed: bool) -> np.ndarray:
    """Value arrays of the allowed renumberings of the same path."""
    v = _values(a)
    if not closed:
        return np.stack([v, 65 - v])
    out = []
    for base in (v, 65 - v):
        for s in range(NCELLS):
            out.append((base - 1 + s) % NCELLS + 1)
    return np.stack(out)


def primary_canonical(a: Arrangement) -> tuple:
    is_tour, is_closed = verifier.check_tour(a)
    if not is_tour:
        raise ValueError("primary_canonical needs a knight tour")
    ren = renumberings(a, is_closed)
    allimg = np.concatenate([images(r) for r in ren])
    return tuple(lexmin(allimg).tolist())


@dataclass
class Census:
    frenicle_total: int = 0
    frenicle_closed: int = 0
    frenicle_open: int = 0
    primary_total: int = 0
    primary_closed: int = 0
    primary_open: int = 0
    diag_magic_frenicle: int = 0
    diag_magic_primary: int = 0
    pattern_counts: dict = field(default_factory=dict)
    subcube_uniform_violations: int = 0
    cyclic_orders: dict = field(default_factory=dict)
    open_complement_self_symmetric: int = 0
    magic_shift_counts: dict = field(default_factory=dict)

    @property
    def diag_magic_level(self) -> str:
        hits = [name for name, n in (("frenicle", self.diag_magic_frenicle),
                                     ("primary", self.diag_magic_primary)) if n == 48]
        return hits[0] if len(hits) == 1 else "none" if not hits else "both"

    def as_dict(self) -> dict:
        return {
            "frenicle_total": self.frenicle_total,
            "frenicle_closed": self.frenicle_closed,
            "frenicle_open": self.frenicle_open,
            "primary_total": self.primary_total,
            "primary_closed": self.primary_closed,
            "primary_open": self.primary_open,
            "diag_magic_frenicle": self.diag_magic_frenicle,
            "diag_magic_primary": self.diag_magic_primary,
            "diag_magic_level": self.diag_magic_level,
            "pattern_counts": dict(sorted(self.pattern_counts.items())),
            "subcube_uniform_violations": self.subcube_uniform_violations,
            "cyclic_orders": {str(k): v for k, v in sorted(self.cyclic_orders.items())},
            "open_complement_self_symmetric": self.open_complement_self_symmetric,
            "magic_shift_counts": {str(k): v for k, v in sorted(self.magic_shift_counts.items())},
        }


def build_census(arrangements) -> Census:
    """Group a stream of magic tours into Frenicle and primary classes.

    Duplicates are allowed and the stream order does not matter: classes are
    keyed by canonical arrays and every count is taken over sorted keys.
    """
    from . import patterns

    classes = {}
    for a in arrangements:
        a = a if isinstance(a, Arrangement) else Arrangement(a)
        k = frenicle_canonical(a)
        if k not in classes:
            classes[k] = Arrangement(k)

    cen = Census()
    primary = {}
    pat = Counter()
    orders = Counter()
    nshift = Counter()
    for k in sorted(classes):
        a = classes[k]
        rep = verifier.verify(a)
        if not (rep.is_tour and rep.ortho_magic):
            raise ValueError("census input contains a non-magic arrangement")
        cen.frenicle_total += 1
        if rep.is_closed:
            cen.frenicle_closed += 1
            orders[patterns.cyclic_order(a)] += 1
            nshift[len(patterns.magic_shifts(a))] += 1
        else:
            cen.frenicle_open += 1
        if rep.diag_magic:
            cen.diag_magic_frenicle += 1
        if not rep.subcube_uniform:
            cen.subcube_uniform_violations += 1
        pat[patterns.classify_pattern(a)[1]] += 1
        pk = primary_canonical(a)
        entry = primary.setdefault(pk, {"closed": rep.is_closed, "diag": False, "members": []})
        entry["diag"] |= rep.diag_magic
        entry["members"].append(k)
        if not rep.is_closed and frenicle_canonical(65 - a.values) == k:
            cen.open_complement_self_symmetric += 1

    for entry in primary.values():
        cen.primary_total += 1
        if entry["closed"]:
            cen.primary_closed += 1
        else:
            cen.primary_open += 1
        if entry["diag"]:
            cen.diag_magic_primary += 1
    cen.pattern_counts = dict(pat)
    cen.cyclic_orders = dict(orders)
    cen.magic_shift_counts = dict(nshift)
    return cen
