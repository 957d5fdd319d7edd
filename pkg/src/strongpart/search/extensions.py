"""Adding a sixth part to a G_{2,5}."""

from __future__ import annotations

import itertools

import numpy as np

from ..core import MultipartiteTournament, out_degrees
from ..errors import NoExtensionExists, PreconditionViolated, UnsupportedConfig
from . import kernels as K

# arcs from an old vertex to (v_{6,1}, v_{6,2})
_OPTIONS = ((0, 0), (1, 0), (0, 1), (1, 1))


def _bounds(window: int) -> tuple[int, int]:
    if window not in (0, 2):
        raise UnsupportedConfig(f"window must be 0 or 2, got {window}")
    return (10 - window) // 2, (10 + window) // 2


def enumerate_extensions(G: MultipartiteTournament, window: int = 0) -> list[MultipartiteTournament]:
    """Every G_{2,6} whose first five parts are ``G`` and whose degrees fit ``window``.

    Each old vertex needs ``5 - d+(v)`` out-arcs into the new part when the
    result is regular, so its choice is forced unless that number is 1.
    """
    if G.r != 2 or G.c != 5:
        raise PreconditionViolated("extensions are defined for G_{2,5}")
    lo, hi = _bounds(window)
    degs = out_degrees(G)
    per_vertex = []
    for d in degs:
        opts = [o for o in _OPTIONS if lo <= d + sum(o) <= hi]
        if not opts:
            raise NoExtensionExists(f"a vertex of out-degree {d} cannot reach [{lo}, {hi}]")
        per_vertex.append(opts)
    result = []
    for combo in itertools.product(*per_vertex):
        to61 = sum(o[0] for o in combo)
        to62 = sum(o[1] for o in combo)
        if not (lo <= 10 - to61 <= hi and lo <= 10 - to62 <= hi):
            continue
        out = list(G.out) + [0, 0]
        for v, (a, b) in enumerate(combo):
            if a:
                out[v] |= 1 << 10
            else:
                out[10] |= 1 << v
            if b:
                out[v] |= 1 << 11
            else:
                out[11] |= 1 << v
        result.append(MultipartiteTournament(2, 6, tuple(out)))
    if not result:
        raise NoExtensionExists("the new part cannot be given admissible degrees")
    return result


def extensions_without_st(G: MultipartiteTournament, window: int = 0):
    """Compiled route: (number of extensions, those lacking an st-partition)."""
    if G.r != 2 or G.c != 5:
        raise PreconditionViolated("extensions are defined for G_{2,5}")
    lo, hi = _bounds(window)
    total, bad = K.extend_and_check(np.array(G.out, np.int64), lo, hi)
    return int(total), [MultipartiteTournament(2, 6, tuple(int(x) for x in m)) for m in bad]
