"""Control relations between the parts of a 2-balanced multipartite tournament."""

from __future__ import annotations

import enum

from .core import (
    MultipartiteTournament,
    VertexId,
    build,
    is_regular,
    part_pairs,
    tournament,
)
from .errors import NotMutuallyC1, PreconditionViolated, SamePart, UnsupportedPartSize


class ControlType(enum.Enum):
    C1 = "1"
    C2 = "2"
    C3 = "3"
    C4 = "4"
    TWO_MIXED = "m"
    ONE = "-3"
    ZERO = "-4"

    @property
    def token(self) -> str:
        return self.value


# block bits (b3 b2 b1 b0) = arcs v_{i,1}->v_{j,1}, v_{i,1}->v_{j,2}, v_{i,2}->v_{j,1}, v_{i,2}->v_{j,2}
_C1_BLOCKS = {0b1001, 0b0110}
_C2_BLOCKS = {0b1010, 0b0101}


def classify_block(bits: int) -> ControlType:
    a = bin(bits).count("1")
    if a == 4:
        return ControlType.C4
    if a == 3:
        return ControlType.C3
    if a == 1:
        return ControlType.ONE
    if a == 0:
        return ControlType.ZERO
    if bits in _C1_BLOCKS:
        return ControlType.C1
    if bits in _C2_BLOCKS:
        return ControlType.C2
    return ControlType.TWO_MIXED


def _require_r2(G: MultipartiteTournament) -> None:
    if G.r != 2:
        raise UnsupportedPartSize("control relations are defined for r = 2 only")


def classify_pair(G: MultipartiteTournament, i: int, j: int) -> ControlType:
    _require_r2(G)
    if i == j:
        raise SamePart(f"part {i} paired with itself")
    return classify_block(G.block(i, j))


def control_matrix(G: MultipartiteTournament) -> list[list[ControlType | None]]:
    """``m[i-1][j-1]`` classifies the ordered pair ``(i, j)``; the diagonal is None."""
    _require_r2(G)
    return [[None if i == j else classify_pair(G, i, j) for j in range(1, G.c + 1)]
            for i in range(1, G.c + 1)]


def render_control_matrix(G: MultipartiteTournament) -> str:
    rows = []
    for row in control_matrix(G):
        rows.append(" ".join(f"{'.' if t is None else t.token:>2}" for t in row))
    return "\n".join(rows)


def is_good_to(G: MultipartiteTournament, u, j: int) -> bool:
    _require_r2(G)
    u = VertexId(*u)
    G.check_part(j)
    if u.part == j:
        raise SamePart(f"{u} lies in part {j}")
    outs = bin(G.out[G.index(u)] & G.part_mask(j)).count("1")
    return outs == 1


def part_good_to(G: MultipartiteTournament, i: int, j: int) -> bool:
    if i == j:
        raise SamePart(f"part {i} paired with itself")
    return all(is_good_to(G, (i, s), j) for s in (1, 2))


def part_controls(G: MultipartiteTournament, i: int, kind: ControlType) -> list[int]:
    """Parts ``j`` with ``classify_pair(G, i, j) == kind``."""
    return [j for j in range(1, G.c + 1) if j != i and classify_pair(G, i, j) is kind]


def controlled_by(G: MultipartiteTournament, i: int, kind: ControlType) -> list[int]:
    """Parts ``j`` with ``classify_pair(G, j, i) == kind``."""
    return [j for j in range(1, G.c + 1) if j != i and classify_pair(G, j, i) is kind]


def find_two_controlled_hub(G: MultipartiteTournament) -> int | None:
    """A part controlled(2) by all others while the others pairwise control(1)."""
    _require_r2(G)
    for i in range(1, G.c + 1):
        rest = [j for j in range(1, G.c + 1) if j != i]
        if any(classify_pair(G, j, i) is not ControlType.C2 for j in rest):
            continue
        if all(classify_pair(G, a, b) is ControlType.C1
               for a in rest for b in rest if a < b):
            return i
    return None


def structure_test_theorem5(G: MultipartiteTournament) -> int | None:
    if G.r != 2 or G.c != 5 or not is_regular(G):
        raise PreconditionViolated("the structure test needs a regular G_{2,5}")
    return find_two_controlled_hub(G)


# -- auxiliary tournament -------------------------------------------------------

def is_mutually_c1(G: MultipartiteTournament) -> bool:
    _require_r2(G)
    return all(classify_pair(G, i, j) is ControlType.C1 for i, j in part_pairs(G.c))


def auxiliary_tournament(G: MultipartiteTournament) -> MultipartiteTournament:
    """Tournament on the parts: ``V_i -> V_j`` iff ``v_{i,s} -> v_{j,s}`` for both slots."""
    if not is_mutually_c1(G):
        raise NotMutuallyC1("every pair of parts must control(1) each other")
    arcs = []
    for i, j in part_pairs(G.c):
        if G.block(i, j) == 0b1001:
            arcs.append((i, j))
        else:
            arcs.append((j, i))
    return tournament(G.c, arcs)


def from_tournament(T: MultipartiteTournament) -> MultipartiteTournament:
    """Inverse of :func:`auxiliary_tournament` for the identity slot numbering.

    ``V_i -> V_j`` becomes the 4-cycle ``v_{i,1} v_{j,1} v_{i,2} v_{j,2}``.
    """
    if T.r != 1:
        raise UnsupportedPartSize("from_tournament expects an ordinary tournament")
    arcs = []
    for i, j in part_pairs(T.c):
        if not T.arc((i, 1), (j, 1)):
            i, j = j, i
        arcs += [((i, 1), (j, 1)), ((j, 1), (i, 2)), ((i, 2), (j, 2)), ((j, 2), (i, 1))]
    return build(2, T.c, arcs)


def reverse_at(T: MultipartiteTournament, v: int) -> MultipartiteTournament:
    """Reverse every arc of the tournament ``T`` incident to vertex ``v``."""
    arcs = []
    for a, b in T.arcs():
        if v in (a.part, b.part):
            a, b = b, a
        arcs.append((a, b))
    return build(1, T.c, arcs)
