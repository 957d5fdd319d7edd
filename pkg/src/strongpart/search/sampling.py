"""Seeded random instances."""

from __future__ import annotations

import random
from typing import Iterator

from ..core import MultipartiteTournament, part_pairs
from ..errors import UnsupportedConfig
from .config import SearchConfig

_CONTRIB = []
for _b in range(16):
    _b3, _b2, _b1, _b0 = (_b >> 3) & 1, (_b >> 2) & 1, (_b >> 1) & 1, _b & 1
    _CONTRIB.append((_b3 + _b2, _b1 + _b0, 2 - (_b3 + _b1), 2 - (_b2 + _b0)))


def random_orientation(r: int, c: int, rng: random.Random) -> MultipartiteTournament:
    """Every inter-part pair oriented by a fair coin."""
    return MultipartiteTournament.from_blocks(
        r, c, [rng.getrandbits(r * r) for _ in part_pairs(c)])


def _random_blocks(c: int, lo: int, hi: int, rng: random.Random) -> list[int]:
    pairs = [(i - 1, j - 1) for i, j in part_pairs(c)]
    P = len(pairs)
    rem = [[0] * c for _ in range(P + 1)]
    for k in range(P - 1, -1, -1):
        rem[k] = rem[k + 1][:]
        rem[k][pairs[k][0]] += 1
        rem[k][pairs[k][1]] += 1
    out = [0] * (2 * c)
    options: list[list[int]] = []
    chosen: list[int] = []
    k = 0
    while k < P:
        if len(options) == k:
            opts = list(range(16))
            rng.shuffle(opts)
            options.append(opts)
        else:
            b = chosen.pop()
            i, j = pairs[k]
            for q, v in enumerate((2 * i, 2 * i + 1, 2 * j, 2 * j + 1)):
                out[v] -= _CONTRIB[b][q]
        i, j = pairs[k]
        verts = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1)
        spare = (2 * rem[k + 1][i], 2 * rem[k + 1][i], 2 * rem[k + 1][j], 2 * rem[k + 1][j])
        opts = options[k]
        while opts:
            b = opts.pop()
            if all(lo <= out[v] + _CONTRIB[b][q] + spare[q] and out[v] + _CONTRIB[b][q] <= hi
                   for q, v in enumerate(verts)):
                break
        else:
            options.pop()
            k -= 1
            if k < 0:
                raise UnsupportedConfig("no instance satisfies the degree window")
            continue
        for q, v in enumerate(verts):
            out[v] += _CONTRIB[b][q]
        chosen.append(b)
        k += 1
    return chosen


def sample_random(cfg: SearchConfig, count: int) -> Iterator[MultipartiteTournament]:
    """``count`` instances within the degree window, reproducible per seed.

    Randomised backtracking: each pair block is tried in a fresh random order.
    The draw is not uniform over labeled instances or isomorphism classes.
    """
    cfg.validate()
    if count < 1:
        raise UnsupportedConfig("count must be positive")
    rng = random.Random(cfg.seed)
    lo, hi = cfg.degree_bounds
    for _ in range(count):
        yield MultipartiteTournament.from_blocks(2, cfg.c, _random_blocks(cfg.c, lo, hi, rng))
