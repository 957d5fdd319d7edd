"""Compiled hot loops for the exhaustive r = 2 searches.

Everything here works on the hex block sequence of a G_{2,c} (one 4-bit block
per part pair in lexicographic order) and on 2c out-neighbour bitmasks.  A
64-bit integer holds a whole block sequence, first pair in the most
significant nibble, so integer order equals code order.
"""

from __future__ import annotations

import itertools

import numba as nb
import numpy as np


def _tables():
    contrib = np.zeros((16, 4), np.int64)
    trans = np.zeros(16, np.int64)
    rc = np.zeros((16, 2, 2), np.int64)
    for b in range(16):
        b3, b2, b1, b0 = (b >> 3) & 1, (b >> 2) & 1, (b >> 1) & 1, b & 1
        # out-degree gained by v_{i,1}, v_{i,2}, v_{j,1}, v_{j,2}
        contrib[b] = (b3 + b2, b1 + b0, 2 - (b3 + b1), 2 - (b2 + b0))
        bit = {(0, 0): b3, (0, 1): b2, (1, 0): b1, (1, 1): b0}
        t = 0
        for a in range(2):
            for c in range(2):
                t = (t << 1) | (1 - bit[c, a])
        trans[b] = t
        for sr in range(2):
            for sc in range(2):
                v = 0
                for a in range(2):
                    for c in range(2):
                        v = (v << 1) | bit[a ^ sr, c ^ sc]
                rc[b, sr, sc] = v
    orbmin = np.zeros(16, np.int64)
    for b in range(16):
        orbmin[b] = min(min(rc[b, x, y], rc[trans[b], x, y]) for x in range(2) for y in range(2))
    return contrib, trans, rc, orbmin


CONTRIB, TRANS, RC, ORBMIN = _tables()
COLSWAP = RC[:, 0, 1].copy()


def pair_table(c):
    return np.array([(i, j) for i in range(c) for j in range(i + 1, c)], np.int64)


def perm_table(c):
    return np.array(list(itertools.permutations(range(c))), np.int64)


def remaining_table(c):
    pairs = pair_table(c)
    P = len(pairs)
    rem = np.zeros((P + 1, c), np.int64)
    for k in range(P - 1, -1, -1):
        rem[k] = rem[k + 1]
        rem[k, pairs[k, 0]] += 1
        rem[k, pairs[k, 1]] += 1
    return rem


@nb.njit(cache=True)
def out_masks(blocks, pairs, c):
    out = np.zeros(2 * c, np.int64)
    for k in range(pairs.shape[0]):
        i = pairs[k, 0]
        j = pairs[k, 1]
        b = blocks[k]
        for a in range(2):
            for s in range(2):
                u = 2 * i + a
                v = 2 * j + s
                if (b >> (3 - (2 * a + s))) & 1:
                    out[u] |= 1 << v
                else:
                    out[v] |= 1 << u
    return out


@nb.njit(cache=True)
def _closure(start, S, adj):
    reach = start
    while True:
        nxt = reach
        m = reach
        while m:
            low = m & -m
            v = 0
            while (low >> v) != 1:
                v += 1
            nxt |= adj[v] & S
            m ^= low
        if nxt == reach:
            return reach
        reach = nxt


@nb.njit(cache=True)
def is_strong_set(S, out, inn):
    low = S & -S
    return _closure(low, S, out) == S and _closure(low, S, inn) == S


@nb.njit(cache=True)
def in_masks(out):
    n = out.shape[0]
    inn = np.zeros(n, np.int64)
    for v in range(n):
        for u in range(n):
            if (out[v] >> u) & 1:
                inn[u] |= 1 << v
    return inn


@nb.njit(cache=True)
def first_st_partition(out, c):
    """Index of the first st-partition in lexicographic order, or -1.

    Partition index ``m`` in ``0 .. 2^(c-1)-1``: bit ``c-1-p`` of ``m`` tells
    whether part ``p`` (1 <= p < c, 0-based) puts slot 1 in class 2.
    """
    inn = in_masks(out)
    full = (1 << (2 * c)) - 1
    for m in range(1 << (c - 1)):
        A = 1
        for p in range(1, c):
            swap = (m >> (c - 1 - p)) & 1
            A |= 1 << (2 * p + swap)
        B = full ^ A
        if is_strong_set(A, out, inn) and is_strong_set(B, out, inn):
            return m
    return -1


@nb.njit(cache=True)
def minimality(blocks, pairs, perms, c):
    """0 if some relabeling yields a smaller code, else the automorphism count."""
    P = pairs.shape[0]
    M = np.zeros((c, c), np.int64)
    for k in range(P):
        i = pairs[k, 0]
        j = pairs[k, 1]
        M[i, j] = blocks[k]
        M[j, i] = TRANS[blocks[k]]
    aut = 0
    for t in range(perms.shape[0]):
        for s in range(1 << c):
            state = 0
            for k in range(P):
                pa = perms[t, pairs[k, 0]]
                pb = perms[t, pairs[k, 1]]
                d = RC[M[pa, pb], (s >> pa) & 1, (s >> pb) & 1]
                if d < blocks[k]:
                    return 0
                if d > blocks[k]:
                    state = 1
                    break
            if state == 0:
                aut += 1
    return aut


@nb.njit(cache=True)
def code_of(blocks):
    v = 0
    for k in range(blocks.shape[0]):
        v = (v << 4) | blocks[k]
    return v


@nb.njit(cache=True)
def dfs(c, lo, hi, prefix, stop_depth, no_st, node_budget, pairs, perms, rem):
    """Orderly backtracking over block sequences.

    Assigns blocks in lexicographic pair order under out-degree bounds
    ``[lo, hi]`` and keeps only leaves whose own labeling is the minimal code,
    so each isomorphism class is emitted exactly once.  The partial-assignment
    rules below are all necessary conditions for minimality:

    * the first block is at most the orbit minimum of every block;
    * each ``(1, j)`` block is at most its column-swapped self;
    * the ``(1, j)`` blocks are non-decreasing in ``j``.

    ``no_st`` = 2 keeps only leaves without an st-partition.  ``no_st`` = 1
    (c = 5 only) does the same and also cuts a branch once three vertices have both
    a part they fully dominate and a part fully dominating them: such vertices
    never have minimum degree 0 in a class, and 16 non-strong partitions need
    at least 8 vertices that do (each contributes at most 2).

    ``prefix`` forces the first blocks.  With ``stop_depth < P`` the search
    stops there and reports the reached prefixes instead of leaves.

    Returns (codes, automorphism counts, node count, exhausted flag).
    """
    P = pairs.shape[0]
    depth_goal = stop_depth if stop_depth < P else P
    n = 2 * c
    out = np.zeros(n, np.int64)
    has2 = np.zeros(n, np.int64)
    has0 = np.zeros(n, np.int64)
    choice = np.full(P, -1, np.int64)
    codes = []
    auts = []
    nodes = 0
    npre = prefix.shape[0]
    k = 0
    while k >= 0:
        i = pairs[k, 0]
        j = pairs[k, 1]
        vi1 = 2 * i
        vi2 = 2 * i + 1
        vj1 = 2 * j
        vj2 = 2 * j + 1
        if choice[k] >= 0:
            b = choice[k]
            out[vi1] -= CONTRIB[b, 0]
            out[vi2] -= CONTRIB[b, 1]
            out[vj1] -= CONTRIB[b, 2]
            out[vj2] -= CONTRIB[b, 3]
            if no_st == 1:
                for q in range(4):
                    v = vi1 if q == 0 else (vi2 if q == 1 else (vj1 if q == 2 else vj2))
                    x = CONTRIB[b, q]
                    if x == 2:
                        has2[v] -= 1
                    elif x == 0:
                        has0[v] -= 1
            if k < npre:
                choice[k] = -1
                k -= 1
                continue
        b = choice[k] + 1
        if k < npre:
            if choice[k] == -1:
                b = prefix[k]
            else:
                b = 16
        found = False
        ri = 2 * rem[k + 1, i]
        rj = 2 * rem[k + 1, j]
        while b < 16:
            ok = True
            o0 = out[vi1] + CONTRIB[b, 0]
            o1 = out[vi2] + CONTRIB[b, 1]
            o2 = out[vj1] + CONTRIB[b, 2]
            o3 = out[vj2] + CONTRIB[b, 3]
            if o0 > hi or o1 > hi or o2 > hi or o3 > hi:
                ok = False
            elif o0 + ri < lo or o1 + ri < lo or o2 + rj < lo or o3 + rj < lo:
                ok = False
            elif k == 0:
                if ORBMIN[b] != b:
                    ok = False
            elif ORBMIN[b] < choice[0]:
                ok = False
            elif i == 0:
                if COLSWAP[b] < b or b < choice[k - 1]:
                    ok = False
            if ok and no_st == 1:
                dead = 0
                for v in range(n):
                    h2 = has2[v]
                    h0 = has0[v]
                    for q in range(4):
                        w = vi1 if q == 0 else (vi2 if q == 1 else (vj1 if q == 2 else vj2))
                        if w == v:
                            x = CONTRIB[b, q]
                            if x == 2:
                                h2 += 1
                            elif x == 0:
                                h0 += 1
                    if h2 > 0 and h0 > 0:
                        dead += 1
                if dead >= 3:
                    ok = False
            if ok:
                found = True
                break
            if k < npre:
                break
            b += 1
        if not found:
            choice[k] = -1
            k -= 1
            continue
        choice[k] = b
        nodes += 1
        out[vi1] += CONTRIB[b, 0]
        out[vi2] += CONTRIB[b, 1]
        out[vj1] += CONTRIB[b, 2]
        out[vj2] += CONTRIB[b, 3]
        if no_st == 1:
            for q in range(4):
                v = vi1 if q == 0 else (vi2 if q == 1 else (vj1 if q == 2 else vj2))
                x = CONTRIB[b, q]
                if x == 2:
                    has2[v] += 1
                elif x == 0:
                    has0[v] += 1
        if nodes > node_budget:
            return codes, auts, nodes, False
        if k == depth_goal - 1:
            if depth_goal < P:
                v = 0
                for q in range(depth_goal):
                    v = (v << 4) | choice[q]
                codes.append(v)
                auts.append(0)
                continue
            if no_st > 0:
                if first_st_partition(out_masks(choice, pairs, c), c) >= 0:
                    continue
            a = minimality(choice, pairs, perms, c)
            if a > 0:
                codes.append(code_of(choice))
                auts.append(a)
        else:
            k += 1
    return codes, auts, nodes, True


@nb.njit(cache=True)
def extend_and_check(base_out, lo6, hi6):
    """All G_{2,6} extensions of a G_{2,5} with out-degrees in ``[lo6, hi6]``.

    ``base_out`` holds the 10 out-masks of the base.  Each old vertex picks its
    arcs to the new part (4 options); only choices meeting the degree window
    for every vertex are kept.  Returns (extension count, out-masks of the
    extensions without an st-partition).
    """
    n_old = 10
    d = np.zeros(n_old, np.int64)
    for v in range(n_old):
        m = base_out[v]
        while m:
            d[v] += 1
            m &= m - 1
    total = 0
    bad = []
    options = np.zeros(n_old, np.int64)
    # base-4 odometer over choices; option bits: 1 = v -> v_{6,1}, 2 = v -> v_{6,2}
    limit = 1 << (2 * n_old)
    for code in range(limit):
        ok = True
        in61 = 0
        in62 = 0
        for v in range(n_old):
            opt = (code >> (2 * v)) & 3
            dv = d[v] + (opt & 1) + (opt >> 1)
            if dv < lo6 or dv > hi6:
                ok = False
                break
            in61 += opt & 1
            in62 += opt >> 1
            options[v] = opt
        if not ok:
            continue
        if 10 - in61 < lo6 or 10 - in61 > hi6 or 10 - in62 < lo6 or 10 - in62 > hi6:
            continue
        total += 1
        out = np.zeros(12, np.int64)
        for v in range(n_old):
            out[v] = base_out[v]
            if options[v] & 1:
                out[v] |= 1 << 10
            else:
                out[10] |= 1 << v
            if options[v] & 2:
                out[v] |= 1 << 11
            else:
                out[11] |= 1 << v
        if first_st_partition(out, 6) < 0:
            bad.append(out)
    return total, bad
