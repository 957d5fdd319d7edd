"""The named graphs: G1, G2, the 4-vertex tournaments T1..T4, and H0."""

from __future__ import annotations

from .core import MultipartiteTournament, build, tournament
from .errors import BadSpec, IndexOutOfRange, UnsupportedPartSize


def _from_out_lists(r: int, c: int, table: dict) -> MultipartiteTournament:
    arcs = [(u, v) for u, heads in table.items() for v in heads]
    return build(r, c, arcs)


def build_G1() -> MultipartiteTournament:
    return _from_out_lists(2, 4, {
        (1, 1): [(4, 1), (2, 1), (3, 2)],
        (1, 2): [(4, 2), (2, 2), (3, 1)],
        (2, 1): [(3, 1), (4, 1), (1, 2)],
        (2, 2): [(3, 2), (4, 2), (1, 1)],
        (3, 1): [(1, 1), (4, 1), (2, 2)],
        (3, 2): [(1, 2), (4, 2), (2, 1)],
        (4, 1): [(1, 2), (2, 2), (3, 2)],
        (4, 2): [(1, 1), (2, 1), (3, 1)],
    })


def build_G2() -> MultipartiteTournament:
    return _from_out_lists(2, 4, {
        (1, 1): [(2, 1), (3, 1), (4, 1)],
        (1, 2): [(2, 2), (3, 2), (4, 2)],
        (2, 1): [(1, 2), (4, 2), (3, 2)],
        (2, 2): [(1, 1), (4, 1), (3, 1)],
        (3, 1): [(2, 1), (1, 2), (4, 2)],
        (3, 2): [(2, 2), (1, 1), (4, 1)],
        (4, 1): [(1, 2), (2, 1), (3, 1)],
        (4, 2): [(1, 1), (2, 2), (3, 2)],
    })


_T_ARCS = {
    1: [(1, 4), (2, 4), (3, 4), (1, 2), (2, 3), (3, 1)],
    2: [(4, 1), (4, 2), (4, 3), (1, 2), (2, 3), (3, 1)],
    3: [(1, 4), (4, 2), (4, 3), (1, 2), (3, 2), (1, 3)],
    4: [(4, 1), (4, 2), (3, 4), (1, 2), (2, 3), (3, 1)],
}


def build_T(k: int) -> MultipartiteTournament:
    if k not in _T_ARCS:
        raise IndexOutOfRange(f"T{k} does not exist; k must be 1..4")
    return tournament(4, _T_ARCS[k])


def attach_controlled_part(G: MultipartiteTournament, dominated_parts) -> MultipartiteTournament:
    """Add a part ``V_{c+1}`` that every existing part control(2)s.

    ``v_{c+1,1}`` dominates both vertices of each part in ``dominated_parts`` and
    is dominated by both vertices of every other part; ``v_{c+1,2}`` is the
    mirror image.
    """
    if G.r != 2 or G.c != 4:
        raise UnsupportedPartSize("attachment is defined on a G_{2,4} base")
    chosen = set(dominated_parts)
    if len(chosen) != 2 or not chosen <= set(range(1, G.c + 1)):
        raise BadSpec(f"dominated_parts must be a 2-subset of 1..{G.c}, got {dominated_parts}")
    new = G.c + 1
    arcs = list(G.arcs())
    for j in range(1, G.c + 1):
        top, bottom = ((new, 1), (new, 2)) if j in chosen else ((new, 2), (new, 1))
        for s in (1, 2):
            arcs.append((top, (j, s)))
            arcs.append(((j, s), bottom))
    return build(2, new, arcs)


def build_H0() -> MultipartiteTournament:
    return attach_controlled_part(build_G1(), (1, 2))


NAMED = {
    "g1": build_G1,
    "g2": build_G2,
    "t1": lambda: build_T(1),
    "t2": lambda: build_T(2),
    "t3": lambda: build_T(3),
    "t4": lambda: build_T(4),
    "h0": build_H0,
}


def named(name: str) -> MultipartiteTournament:
    try:
        return NAMED[name.lower()]()
    except KeyError:
        raise IndexOutOfRange(f"unknown construction {name!r}; choose from {sorted(NAMED)}") from None
