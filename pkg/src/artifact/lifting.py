"""Census engine: enumerate every magic knight tour by lifting residues.

Write each value as v - 1 = sum of bits b_j 2^j. Because all 48 line sums equal
126 in these shifted values, the line sums of the labels mod M fix the parity
of the next bit on every line, so bit j lives in a coset of the 27-dimensional
binary code spanned by the 2x2x2 boxes. A labelling mod M splits the cells
into M residue classes of 64/M cells each. For a tour (or an open path) class r
must be perfectly matched by knight edges to class r+1, which kills almost
every candidate early. Going from M to 2M splits every class in half.

Parents (labellings mod 4) are enumerated directly over the code and reduced
by the 48-element group formed by colour-preserving cube symmetries plus
colour-swapping ones composed with the complement. The mod 4 to mod 8 step
joins the two halves of the cube (layers 0-1 and 2-3) meet-in-the-middle
style; later steps use a bitwise DFS with line-parity, class-weight and
knight-support propagation. Level 64 is a full labelling, checked for exact
line sums (mod-64 information only pins them up to a multiple of 64).

Every kernel is a numba function operating on uint64 cell masks.
"""
from __future__ import annotations

import numba as nb
import numpy as np

from .cube import NBR_MASK, LINES, CELL_LINES, COLOR, index_of
from .symmetry import PERM, CFLAG

U64 = np.uint64
ONE = U64(1)
ALL = U64(0xFFFFFFFFFFFFFFFF)
_M1 = U64(0x5555555555555555)
_M2 = U64(0x3333333333333333)
_M4 = U64(0x0F0F0F0F0F0F0F0F)
_H01 = U64(0x0101010101010101)

NBM = np.array(NBR_MASK, dtype=np.uint64)
LN = np.array(LINES, dtype=np.int64)
CL = np.array(CELL_LINES, dtype=np.int64)
LINE_MASK = np.array([sum(1 << int(c) for c in L) for L in LINES], dtype=np.uint64)
C0 = U64(sum(1 << i for i in range(64) if COLOR[i] == 0))
C1 = U64(sum(1 << i for i in range(64) if COLOR[i] == 1))
PERM_ = np.array(PERM, dtype=np.int64)
CFLAG_ = np.array(CFLAG, dtype=np.int64)
LAYERS01 = U64(0x00000000FFFFFFFF)
LAYERS23 = U64(0xFFFFFFFF00000000)

# BOX[zp, j]: the 2x2x2 box on layers zp, zp+1 with corner row/column from j
BOX = np.zeros((3, 9), dtype=np.uint64)
for _zp in range(3):
    for _j in range(9):
        _r0, _c0 = divmod(_j, 3)
        BOX[_zp, _j] = sum(1 << index_of((z, r, c))
                           for z in (_zp, _zp + 1) for r in (_r0, _r0 + 1) for c in (_c0, _c0 + 1))
BASIS = BOX.reshape(-1).copy()


def _dilation_tables():
    # DT1[j, b]: cells adjacent to at least one cell of byte j pattern b; DT2: to at least two
    d1 = np.zeros((8, 256), dtype=np.uint64)
    d2 = np.zeros((8, 256), dtype=np.uint64)
    for j in range(8):
        for b in range(256):
            o1 = o2 = 0
            for i in range(8):
                if b >> i & 1:
                    n = int(NBM[8 * j + i])
                    o2 |= o1 & n
                    o1 |= n
            d1[j, b] = o1
            d2[j, b] = o2
    return d1, d2


DT1, DT2 = _dilation_tables()


@nb.njit(cache=True, nogil=True)
def popcount(x):
    x = x - ((x >> U64(1)) & _M1)
    x = (x & _M2) + ((x >> U64(2)) & _M2)
    x = (x + (x >> U64(4))) & _M4
    return np.int64((x * _H01) >> U64(56))


@nb.njit(cache=True, nogil=True)
def lowbit(x):
    return popcount((x & (~x + ONE)) - ONE)


@nb.njit(cache=True, nogil=True)
def dilate(x, DT1):
    o = U64(0)
    for j in range(8):
        b = (x >> U64(8 * j)) & U64(255)
        if b:
            o |= DT1[j, b]
    return o


@nb.njit(cache=True, nogil=True)
def matching_size(A, B, NBM):
    """Maximum matching between cell sets A and B along knight edges."""
    la = np.zeros(64, np.int64)
    na = 0
    m = A
    while m:
        la[na] = lowbit(m)
        na += 1
        m &= m - ONE
    match_b = np.full(64, -1, np.int64)
    match_a = np.full(64, -1, np.int64)
    stack = np.zeros(64, np.int64)
    prev = np.full(64, -1, np.int64)
    size = 0
    for k in range(na):
        seen = U64(0)
        sp = 0
        stack[0] = la[k]
        found = -1
        while sp >= 0:
            a = stack[sp]
            adj = NBM[a] & B & ~seen
            if adj == 0:
                sp -= 1
                continue
            b = lowbit(adj)
            seen |= ONE << U64(b)
            prev[b] = a
            if match_b[b] < 0:
                found = b
                break
            sp += 1
            stack[sp] = match_b[b]
        if found < 0:
            continue
        b = found
        while True:
            a = prev[b]
            nxt = match_a[a]
            match_b[b] = a
            match_a[a] = b
            if a == la[k]:
                break
            b = nxt
        size += 1
    return size


@nb.njit(cache=True, nogil=True)
def classes_ok(cls, n, NBM, deficit):
    """Consecutive classes perfectly matched; the wrap pair may miss `deficit` edges."""
    s = popcount(cls[0])
    for r in range(n):
        m = matching_size(cls[r], cls[(r + 1) % n], NBM)
        if r == n - 1:
            if m < s - deficit:
                return False
        elif m < s:
            return False
    return True


@nb.njit(cache=True, nogil=True)
def required_parity(cls, M, LN, req):
    """Parity of the next bit on each line, or False if some line sum is off mod M."""
    res = np.zeros(64, np.int64)
    for k in range(M):
        m = cls[k]
        while m:
            res[lowbit(m)] = k
            m &= m - ONE
    for L in range(48):
        s = 0
        for j in range(4):
            s += res[LN[L, j]]
        d = 126 - s
        if d % M != 0:
            return False
        req[L] = (d // M) % 2
    return True


@nb.njit(cache=True, nogil=True)
def gf2_particular(LINE_MASK, req):
    """Some y with parity(y & line) = req[line] for all 48 lines."""
    rm = np.zeros(48, np.uint64)
    rr = np.zeros(48, np.int64)
    pv = np.zeros(48, np.int64)
    nr = 0
    for L in range(48):
        m = LINE_MASK[L]
        rh = req[L]
        for j in range(nr):
            if (m >> U64(pv[j])) & ONE:
                m ^= rm[j]
                rh ^= rr[j]
        if m == 0:
            if rh:
                return False, U64(0)
            continue
        p = lowbit(m)
        for j in range(nr):
            if (rm[j] >> U64(p)) & ONE:
                rm[j] ^= m
                rr[j] ^= rh
        rm[nr] = m
        rr[nr] = rh
        pv[nr] = p
        nr += 1
    y = U64(0)
    for j in range(nr):
        if rr[j]:
            y |= ONE << U64(pv[j])
    return True, y


# ---------------------------------------------------------------- level 4

@nb.njit(cache=True, nogil=True)
def enumerate_level4(BASIS, C0, C1, NBM, deficit, out, fmask, fbits):
    """All bit-1 vectors x giving a feasible labelling mod 4 (Gray code over the code).

    Cells in fmask must carry the bits given by fbits.
    """
    x = U64(0)
    n = 0
    cls = np.zeros(4, np.uint64)
    total = 1 << 27
    for g in range(1, total + 1):
        if (x ^ fbits) & fmask == 0 and popcount(x & C0) == 16 and popcount(x & C1) == 16:
            cls[0] = C0 & ~x
            cls[1] = C1 & ~x
            cls[2] = C0 & x
            cls[3] = C1 & x
            if classes_ok(cls, 4, NBM, deficit):
                if n >= out.shape[0]:
                    return -1
                out[n] = x
                n += 1
        if g == total:
            break
        t = 0
        while not (g >> t) & 1:
            t += 1
        x ^= BASIS[t]
    return n


@nb.njit(cache=True, nogil=True)
def is_canonical_parent(x, PERM, CFLAG):
    for g in range(1, PERM.shape[0]):
        y = U64(0)
        for c in range(64):
            if (x >> U64(c)) & ONE:
                y |= ONE << U64(PERM[g, c])
        if CFLAG[g]:
            y = ~y
        if y < x:
            return False
    return True


@nb.njit(cache=True, nogil=True)
def canonical_mask(xs, PERM, CFLAG):
    keep = np.zeros(xs.shape[0], np.bool_)
    for i in range(xs.shape[0]):
        keep[i] = is_canonical_parent(xs[i], PERM, CFLAG)
    return keep


# ---------------------------------------------------------------- mod 4 -> mod 8

@nb.njit(cache=True, nogil=True)
def _half_tables(base, boxes, half, cls, M, DT1, masks, dils, wkey, complementary, t,
                 fmask, fbits):
    # the 512 vectors (base ^ span(boxes)) restricted to one half of the cube
    v = base
    for g in range(512):
        if g > 0:
            s = 0
            while not (g >> s) & 1:
                s += 1
            v ^= boxes[s]
        h = v & half
        masks[g, 2 * M] = h
        if (h ^ fbits) & fmask & half:
            wkey[g] = -1
            continue
        key = 0
        bad = False
        for k in range(M):
            a = cls[k] & half
            m1 = a & h
            m0 = a & ~h
            masks[g, k] = m0
            masks[g, k + M] = m1
            dils[g, k] = dilate(m0, DT1)
            dils[g, k + M] = dilate(m1, DT1)
            w = popcount(m1)
            if complementary:
                w = t - w
                if w < 0:
                    bad = True
            key = key * 17 + w
        wkey[g] = -1 if bad else key


@nb.njit(cache=True, nogil=True)
def mitm_refine(cls, M, deficit, out, fmask, fbits, LN, LINE_MASK, BOX, DT1, NBM):
    """Children of a labelling mod M as bit vectors y (new classes: cls&~y, cls&y).

    Splits y into a middle part (boxes straddling layers 1 and 2, looped over)
    and two halves matched through a weight-key hash join.
    """
    req = np.zeros(48, np.int64)
    if not required_parity(cls, M, LN, req):
        return 0
    ok, y0 = gf2_particular(LINE_MASK, req)
    if not ok:
        return 0
    n2 = 2 * M
    t = popcount(cls[0]) // 2
    lo_m = np.zeros((512, n2 + 1), np.uint64)
    lo_d = np.zeros((512, n2), np.uint64)
    lo_k = np.zeros(512, np.int64)
    hi_m = np.zeros((512, n2 + 1), np.uint64)
    hi_d = np.zeros((512, n2), np.uint64)
    hi_k = np.zeros(512, np.int64)
    nk = 1
    for k in range(M):
        nk *= 17
    head = np.full(nk, -1, np.int64)
    nxt = np.full(512, -1, np.int64)
    newc = np.zeros(n2, np.uint64)
    m = y0
    nsol = 0
    for gm in range(512):
        if gm > 0:
            s = 0
            while not (gm >> s) & 1:
                s += 1
            m ^= BOX[1, s]
            for i in range(512):
                if lo_k[i] >= 0:
                    head[lo_k[i]] = -1
        _half_tables(m, BOX[0], LAYERS01, cls, M, DT1, lo_m, lo_d, lo_k, False, t,
                     fmask, fbits)
        _half_tables(m, BOX[2], LAYERS23, cls, M, DT1, hi_m, hi_d, hi_k, True, t,
                     fmask, fbits)
        for i in range(512):
            if lo_k[i] >= 0:
                nxt[i] = head[lo_k[i]]
                head[lo_k[i]] = i
        for j in range(512):
            key = hi_k[j]
            if key < 0:
                continue
            i = head[key]
            while i >= 0:
                good = True
                for r in range(n2):
                    c = lo_m[i, r] | hi_m[j, r]
                    need = ALL
                    if r != n2 - 1:
                        rn = (r + 1) % n2
                        need &= lo_d[i, rn] | hi_d[j, rn]
                    if r != 0:
                        rp = (r - 1 + n2) % n2
                        need &= lo_d[i, rp] | hi_d[j, rp]
                    if c & ~need:
                        good = False
                        break
                if good:
                    for r in range(n2):
                        newc[r] = lo_m[i, r] | hi_m[j, r]
                    if classes_ok(newc, n2, NBM, deficit):
                        if nsol >= out.shape[0]:
                            return -1
                        out[nsol] = lo_m[i, n2] | hi_m[j, n2]
                        nsol += 1
                i = nxt[i]
    return nsol


# ---------------------------------------------------------------- mod M -> 2M, DFS

@nb.njit(cache=True, nogil=True)
def dfs_refine(cls, M, deficit, out, fmask, fbits, LN, CL, DT1, DT2, NBM):
    """Children of a labelling mod M by bitwise DFS over the cells.

    Propagation: a line with three decided bits forces the fourth; a class
    whose quota of ones (or zeros) is reached fills the rest; every decided
    cell must keep a knight neighbour in the previous and next new class,
    otherwise the opposite bit is forced; a cell with a single possible
    partner forces that partner.
    """
    req = np.zeros(48, np.int64)
    if not required_parity(cls, M, LN, req):
        return 0
    size = popcount(cls[0])
    t = size // 2
    pc = np.zeros(64, np.int64)
    for k in range(M):
        mm = cls[k]
        while mm:
            pc[lowbit(mm)] = k
            mm &= mm - ONE
    n2 = 2 * M
    bit = np.full(64, -1, np.int64)
    lcnt = np.zeros(48, np.int64)
    lpar = np.zeros(48, np.int64)
    m0 = np.zeros(M, np.uint64)
    m1 = np.zeros(M, np.uint64)
    trail = np.zeros(64, np.int64)
    tl = 0
    qc = np.zeros(4096, np.int64)
    qb = np.zeros(4096, np.int64)
    st_tl = np.zeros(70, np.int64)
    st_c = np.zeros(70, np.int64)
    st_v = np.zeros(70, np.int64)
    P = np.zeros(n2, np.uint64)
    A = np.zeros(n2, np.uint64)
    D1 = np.zeros(n2, np.uint64)
    D2 = np.zeros(n2, np.uint64)
    new = np.zeros(n2, np.uint64)
    nsol = 0
    sp = 0
    st_v[0] = -1
    st_tl[0] = 0
    first = True
    while sp >= 0:
        if st_v[sp] == -1:
            c = -1
            if not first:
                for i in range(64):
                    if bit[i] < 0:
                        c = i
                        break
                if c < 0:
                    for k in range(M):
                        new[k] = m0[k]
                        new[k + M] = m1[k]
                    if classes_ok(new, n2, NBM, deficit):
                        y = U64(0)
                        for k in range(M):
                            y |= m1[k]
                        if nsol >= out.shape[0]:
                            return -1
                        out[nsol] = y
                        nsol += 1
                    sp -= 1
                    continue
                st_c[sp] = c
                st_v[sp] = 0
            else:
                # root: propagate once with no decision
                st_c[sp] = -1
                st_v[sp] = 1
            st_tl[sp] = tl
        # undo back to this node's entry point
        while tl > st_tl[sp]:
            tl -= 1
            i = trail[tl]
            b = bit[i]
            bit[i] = -1
            for a in range(3):
                L = CL[i, a]
                lcnt[L] -= 1
                lpar[L] ^= b
            if b == 1:
                m1[pc[i]] &= ~(ONE << U64(i))
            else:
                m0[pc[i]] &= ~(ONE << U64(i))
        if st_v[sp] >= 2:
            sp -= 1
            continue
        v = st_v[sp]
        st_v[sp] += 1
        qh = 0
        qt = 0
        ok = True
        if st_c[sp] >= 0:
            qc[0] = st_c[sp]
            qb[0] = v
            qt = 1
        else:
            st_v[sp] = 2
            fm = fmask
            while fm:
                c = lowbit(fm)
                fm &= fm - ONE
                qc[qt] = c
                qb[qt] = 1 if (fbits >> U64(c)) & ONE else 0
                qt += 1
        first = False
        while ok:
            while qh < qt and ok:
                c = qc[qh]
                b = qb[qh]
                qh += 1
                if bit[c] >= 0:
                    if bit[c] != b:
                        ok = False
                    continue
                bit[c] = b
                trail[tl] = c
                tl += 1
                k = pc[c]
                if b == 1:
                    m1[k] |= ONE << U64(c)
                else:
                    m0[k] |= ONE << U64(c)
                for a in range(3):
                    L = CL[c, a]
                    lcnt[L] += 1
                    lpar[L] ^= b
                    if lcnt[L] == 4:
                        if lpar[L] != req[L]:
                            ok = False
                    elif lcnt[L] == 3:
                        for j in range(4):
                            d = LN[L, j]
                            if bit[d] < 0:
                                qc[qt] = d
                                qb[qt] = req[L] ^ lpar[L]
                                qt += 1
                n1 = popcount(m1[k])
                n0 = popcount(m0[k])
                if n1 > t or n0 > size - t:
                    ok = False
                elif n1 == t or n0 == size - t:
                    fill = 0 if n1 == t else 1
                    rest = cls[k] & ~(m0[k] | m1[k])
                    while rest:
                        qc[qt] = lowbit(rest)
                        qb[qt] = fill
                        qt += 1
                        rest &= rest - ONE
            if not ok:
                break
            # knight support, all classes at once
            for k in range(M):
                un = cls[k] & ~(m0[k] | m1[k])
                P[k] = m0[k] | un
                P[k + M] = m1[k] | un
                A[k] = m0[k]
                A[k + M] = m1[k]
            for r in range(n2):
                o1 = U64(0)
                o2 = U64(0)
                x = P[r]
                for j in range(8):
                    bt = (x >> U64(8 * j)) & U64(255)
                    if bt:
                        t1 = DT1[j, bt]
                        o2 |= (o1 & t1) | DT2[j, bt]
                        o1 |= t1
                D1[r] = o1
                D2[r] = o2
            for r2 in range(n2):
                k = r2 % M
                b = r2 // M
                rn = (r2 + 1) % n2
                rp = (r2 - 1 + n2) % n2
                need = ALL
                if r2 != n2 - 1:
                    need &= D1[rn]
                if r2 != 0:
                    need &= D1[rp]
                bad = cls[k] & ~need
                if bad & A[r2]:
                    ok = False
                    break
                un = cls[k] & ~(m0[k] | m1[k]) & bad
                while un:
                    qc[qt] = lowbit(un)
                    qb[qt] = 1 - b
                    qt += 1
                    un &= un - ONE
                for side in range(2):
                    if side == 0:
                        if r2 == n2 - 1:
                            continue
                        ro = rn
                    else:
                        if r2 == 0:
                            continue
                        ro = rp
                    w = A[r2] & ~D2[ro]
                    while w:
                        c = lowbit(w)
                        w &= w - ONE
                        s_ = NBM[c] & P[ro]
                        if s_ & A[ro] == 0:
                            qc[qt] = lowbit(s_)
                            qb[qt] = ro // M
                            qt += 1
            if qh == qt:
                break
        if ok:
            sp += 1
            st_v[sp] = -1
            st_tl[sp] = tl
    return nsol


# ---------------------------------------------------------------- full pipeline

@nb.njit(cache=True, nogil=True)
def _split(cls, M, y, dst):
    for k in range(M):
        dst[k] = cls[k] & ~y
        dst[k + M] = cls[k] & y


@nb.njit(cache=True, nogil=True)
def complete_parent(x, deficit, out, y8, y16, y32, y64, fmask, fbits,
                    LN, CL, LINE_MASK, BOX, DT1, DT2, NBM, C0, C1):
    """All full labellings (value arrays) lifting the mod-4 labelling given by x.

    Writes rows of `out` (values 1..64 by cell) and returns their number, or -1
    on overflow of any of the work buffers y8..y64. fbits[j] holds bit j of
    v - 1 for the cells of fmask whose value is prescribed.
    """
    c4 = np.empty(4, np.uint64)
    c4[0] = C0 & ~x
    c4[1] = C1 & ~x
    c4[2] = C0 & x
    c4[3] = C1 & x
    n8 = mitm_refine(c4, 4, deficit, y8, fmask, fbits[2], LN, LINE_MASK, BOX, DT1, NBM)
    if n8 < 0:
        return -1
    c8 = np.empty(8, np.uint64)
    c16 = np.empty(16, np.uint64)
    c32 = np.empty(32, np.uint64)
    c64 = np.empty(64, np.uint64)
    vals = np.empty(64, np.int64)
    nout = 0
    for a in range(n8):
        _split(c4, 4, y8[a], c8)
        n16 = dfs_refine(c8, 8, deficit, y16, fmask, fbits[3], LN, CL, DT1, DT2, NBM)
        if n16 < 0:
            return -1
        for b in range(n16):
            _split(c8, 8, y16[b], c16)
            n32 = dfs_refine(c16, 16, deficit, y32, fmask, fbits[4], LN, CL, DT1, DT2, NBM)
            if n32 < 0:
                return -1
            for c in range(n32):
                _split(c16, 16, y32[c], c32)
                n64 = dfs_refine(c32, 32, deficit, y64, fmask, fbits[5], LN, CL, DT1, DT2, NBM)
                if n64 < 0:
                    return -1
                for d in range(n64):
                    _split(c32, 32, y64[d], c64)
                    for r in range(64):
                        vals[lowbit(c64[r])] = r + 1
                    good = True
                    for L in range(48):
                        s = 0
                        for j in range(4):
                            s += vals[LN[L, j]]
                        if s != 130:
                            good = False
                            break
                    if good:
                        if nout >= out.shape[0]:
                            return -1
                        out[nout, :] = vals
                        nout += 1
    return nout


@nb.njit(cache=True, nogil=True)
def complete_many(xs, deficit, out, counts, fmask, fbits, LN, CL, LINE_MASK, BOX, DT1, DT2, NBM, C0, C1):
    """Run complete_parent over many parents; counts[i] = solutions of parent i."""
    buf = np.empty((1 << 14, 64), np.int64)
    y8 = np.empty(1 << 20, np.uint64)
    y16 = np.empty(1 << 18, np.uint64)
    y32 = np.empty(1 << 16, np.uint64)
    y64 = np.empty(1 << 14, np.uint64)
    n = 0
    for i in range(xs.shape[0]):
        k = complete_parent(xs[i], deficit, buf, y8, y16, y32, y64, fmask, fbits, LN, CL, LINE_MASK, BOX, DT1, DT2, NBM, C0, C1)
        if k < 0 or n + k > out.shape[0]:
            return -1
        out[n:n + k, :] = buf[:k]
        n += k
        counts[i] = k
    return n


# ---------------------------------------------------------------- python wrappers

NO_FIX = np.zeros(6, dtype=np.uint64)


def fixed_bits(fixed: dict):
    """(fmask, fbits[6]) for a {cell: value} constraint."""
    fmask = 0
    fbits = [0] * 6
    for c, v in fixed.items():
        fmask |= 1 << c
        for j in range(6):
            if ((v - 1) >> j) & 1:
                fbits[j] |= 1 << c
    return U64(fmask), np.array(fbits, dtype=np.uint64)


def level4_parents(deficit: int = 1, canonical: bool = True, fixed: dict | None = None) -> np.ndarray:
    """Feasible mod-4 labellings in the colour convention (v-1) % 2 = colour.

    With canonical=True only one representative per orbit of the 48-element
    residual group is kept. `fixed` restricts to labellings compatible with
    prescribed values on some cells.
    """
    fmask, fbits = fixed_bits(fixed or {})
    out = np.empty(12_000_000, dtype=np.uint64)
    n = enumerate_level4(BASIS, C0, C1, NBM, deficit, out, fmask, fbits[1])
    if n < 0:
        raise RuntimeError("level-4 buffer overflow")
    xs = out[:n].copy()
    if canonical:
        xs = xs[canonical_mask(xs, PERM_, CFLAG_)]
    return xs


def complete(xs, deficit: int = 1, fixed: dict | None = None):
    """Value arrays of all magic tours whose mod-4 labelling is in xs.

    Returns (arrangements, per-parent counts).
    """
    xs = np.ascontiguousarray(xs, dtype=np.uint64)
    fmask, fbits = fixed_bits(fixed or {})
    cap = 1 << 14
    while True:
        out = np.empty((cap, 64), dtype=np.int64)
        counts = np.zeros(len(xs), dtype=np.int64)
        n = complete_many(xs, deficit, out, counts, fmask, fbits,
                          LN, CL, LINE_MASK, BOX, DT1, DT2, NBM, C0, C1)
        if n >= 0:
            return out[:n].copy(), counts
        if cap > 1 << 18:
            raise RuntimeError("lifting buffer overflow")
        cap *= 4


def parent_of(values) -> np.uint64:
    """Bit-1 vector of (v - 1) for an arrangement already in the colour convention."""
    v = np.asarray(values, dtype=np.int64) - 1
    return U64(sum(1 << i for i in range(64) if (v[i] >> 1) & 1))


def in_color_convention(values) -> bool:
    v = np.asarray(values, dtype=np.int64) - 1
    return bool(np.all(v % 2 == COLOR))
