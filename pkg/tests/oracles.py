"""Independent reference implementations used to check the package.

Nothing here shares code paths with the routines under test beyond the
``MultipartiteTournament`` container and ``relabel``.
"""

from __future__ import annotations

import itertools
from collections import defaultdict

import numpy as np

from strongpart.core import MultipartiteTournament, canonical_form, relabel


def block_contrib(b):
    """Out-degree gained by v_{i,1}, v_{i,2}, v_{j,1}, v_{j,2} from block ``b``."""
    b3, b2, b1, b0 = (b >> 3) & 1, (b >> 2) & 1, (b >> 1) & 1, b & 1
    return (b3 + b2, b1 + b0, 2 - (b3 + b1), 2 - (b2 + b0))


def brute_partitions(G: MultipartiteTournament) -> set[frozenset]:
    """All partitions into r maximal tournaments, without any normalization."""
    r, c = G.r, G.c
    found = set()
    for perms in itertools.product(itertools.permutations(range(r)), repeat=c):
        classes = [set() for _ in range(r)]
        for p, sigma in enumerate(perms):
            for s, k in enumerate(sigma):
                classes[k].add((p + 1, s + 1))
        found.add(frozenset(frozenset(cl) for cl in classes))
    return found


def brute_canonical(G: MultipartiteTournament) -> tuple[int, ...]:
    """Minimum block sequence over every part and slot relabeling."""
    slot_choices = list(itertools.permutations(range(1, G.r + 1)))
    best = None
    for pp in itertools.permutations(range(1, G.c + 1)):
        for sps in itertools.product(slot_choices, repeat=G.c):
            code = tuple(relabel(G, pp, sps).blocks())
            if best is None or code < best:
                best = code
    return best


def reach(out, start, n):
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        for w in range(n):
            if (out[v] >> w) & 1 and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def strong_by_bfs(out, n) -> bool:
    if n == 1:
        return True
    inn = [sum(1 << u for u in range(n) if (out[u] >> v) & 1) for v in range(n)]
    return len(reach(out, 0, n)) == n and len(reach(inn, 0, n)) == n


# -- ordinary tournaments -------------------------------------------------------

def _tour_canon(out, n):
    """Canonical arc set under permutations that keep vertices sorted by score."""
    score = [bin(m).count("1") for m in out]
    groups = defaultdict(list)
    for v in range(n):
        groups[score[v]].append(v)
    keys = sorted(groups)
    best = None
    for choice in itertools.product(*(itertools.permutations(groups[k]) for k in keys)):
        order = [v for grp in choice for v in grp]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((pos[u], pos[v]) for u in range(n) for v in range(n) if (out[u] >> v) & 1))
        if best is None or code < best:
            best = code
    return best


def _aut(out, n):
    cnt = 0
    for perm in itertools.permutations(range(n)):
        if all(((out[perm[u]] >> perm[v]) & 1) == ((out[u] >> v) & 1)
               for u in range(n) for v in range(n)):
            cnt += 1
    return cnt


def tournament_classes(n_max: int = 7) -> dict[int, list[tuple[int, ...]]]:
    """Isomorphism class representatives (out-mask tuples) for orders 1..n_max.

    Order n classes come from adding a vertex to every order n-1 class in all
    2^(n-1) ways and rejecting duplicates by a score-respecting canonical form.
    """
    classes = {1: [(0,)]}
    for n in range(2, n_max + 1):
        seen = {}
        for base in classes[n - 1]:
            for mask in range(1 << (n - 1)):
                out = list(base) + [0]
                for u in range(n - 1):
                    if (mask >> u) & 1:
                        out[u] |= 1 << (n - 1)
                    else:
                        out[n - 1] |= 1 << u
                key = _tour_canon(out, n)
                seen.setdefault(key, tuple(out))
        classes[n] = list(seen.values())
    return classes


def labeled_tournament_tally(reps, n) -> int:
    """Σ n!/|Aut| over class representatives; must equal 2^C(n,2)."""
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    return sum(fact // _aut(out, n) for out in reps)


def brute_tournament_class_count(n: int) -> int:
    """Classes of order n by canonicalising every labeled tournament."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        out = [0] * n
        for k, (u, v) in enumerate(pairs):
            if (mask >> k) & 1:
                out[u] |= 1 << v
            else:
                out[v] |= 1 << u
        seen.add(_tour_canon(out, n))
    return len(seen)


# -- G_{2,c} counts -----------------------------------------------------------------

def labeled_regular_count(c: int) -> int:
    """Number of labeled regular G_{2,c}, by dynamic programming over degree vectors."""
    target = c - 1
    pairs = list(itertools.combinations(range(c), 2))
    last = {}
    for k, (i, j) in enumerate(pairs):
        last[i] = last[j] = k
    states = {tuple([0] * (2 * c)): 1}
    for k, (i, j) in enumerate(pairs):
        nxt = defaultdict(int)
        verts = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1)
        for s, cnt in states.items():
            for b in range(16):
                t = list(s)
                for q, v in enumerate(verts):
                    t[v] += block_contrib(b)[q]
                if any(t[v] > target for v in verts):
                    continue
                if last[i] == k and (t[2 * i] != target or t[2 * i + 1] != target):
                    continue
                if last[j] == k and (t[2 * j] != target or t[2 * j + 1] != target):
                    continue
                nxt[tuple(t)] += cnt
        states = nxt
    return sum(states.values())


def naive_regular_c4_codes() -> set[str]:
    """Canonical hex codes of all regular G_{2,4}, from all 2^24 block sequences."""
    contrib = np.array([block_contrib(b) for b in range(16)], np.int8)
    pairs = list(itertools.combinations(range(4), 2))
    regular = []
    chunk = 1 << 20
    for start in range(0, 1 << 24, chunk):
        codes = np.arange(start, start + chunk, dtype=np.int64)
        deg = np.zeros((chunk, 8), np.int8)
        for k, (i, j) in enumerate(pairs):
            b = (codes >> (4 * (5 - k))) & 15
            cb = contrib[b]
            deg[:, 2 * i] += cb[:, 0]
            deg[:, 2 * i + 1] += cb[:, 1]
            deg[:, 2 * j] += cb[:, 2]
            deg[:, 2 * j + 1] += cb[:, 3]
        regular.extend(codes[(deg == 3).all(axis=1)].tolist())
    assert len(regular) == labeled_regular_count(4)
    out = set()
    for code in regular:
        blocks = [(code >> (4 * (5 - k))) & 15 for k in range(6)]
        out.add(canonical_form(MultipartiteTournament.from_blocks(2, 4, blocks)).hex())
    return out
