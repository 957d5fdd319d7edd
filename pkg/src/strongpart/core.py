"""Balanced multipartite tournaments.

A tournament ``G_{r,c}`` has ``c`` parts of ``r`` vertices each.  Vertices are
addressed by 1-based ``VertexId(part, slot)`` as in the usual ``v_{i,j}``
notation; internally they live at the global index ``(part-1)*r + (slot-1)``
and adjacency is a tuple of out-neighbour bitmasks over that order.

Between two parts ``i < j`` the orientation is summarised by a *block*: an
``r*r``-bit integer whose bit for slot pair ``(a, b)`` is set iff
``v_{i,a} -> v_{j,b}``.  Slot pair ``(1, 1)`` is the most significant bit, so
for ``r = 2`` the bits ``b3 b2 b1 b0`` are ``(1,1) (1,2) (2,1) (2,2)``.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DoubleOrientation,
    EmptySet,
    IndexOutOfRange,
    IntraPartArc,
    LengthMismatch,
    MalformedInput,
    MissingOrientation,
    TooFewParts,
    UnsupportedPartSize,
    ValidationError,
)


class VertexId(NamedTuple):
    part: int
    slot: int

    def __str__(self):
        return f"v{self.part},{self.slot}"


class DegreeInfo(NamedTuple):
    out_degree: int
    in_degree: int
    min_degree: int


class Regularity(enum.Enum):
    REGULAR = "regular"
    SEMI_REGULAR = "semi-regular"
    IRREGULAR = "irregular"


def _popcount(x: int) -> int:
    return bin(x).count("1")


def part_pairs(c: int) -> list[tuple[int, int]]:
    """The 1-based unordered part pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return list(itertools.combinations(range(1, c + 1), 2))


@dataclass(frozen=True)
class MultipartiteTournament:
    r: int
    c: int
    out: tuple[int, ...]

    def __post_init__(self):
        if self.c < 3 or self.r < 1:
            raise ValidationError(f"need c >= 3 and r >= 1, got r={self.r}, c={self.c}")
        if len(self.out) != self.r * self.c:
            raise ValidationError("adjacency length does not match r*c")
        n = self.r * self.c
        for v, mask in enumerate(self.out):
            if mask >> n:
                raise IndexOutOfRange(f"vertex {v} has an out-neighbour beyond {n}")
            if mask & self.part_mask(v // self.r + 1):
                raise IntraPartArc(f"vertex {self.vertex_id(v)} has an arc inside its part")
        for u in range(n):
            for v in range(u + 1, n):
                if u // self.r == v // self.r:
                    continue
                uv = (self.out[u] >> v) & 1
                vu = (self.out[v] >> u) & 1
                if uv and vu:
                    raise DoubleOrientation(
                        f"both {self.vertex_id(u)}->{self.vertex_id(v)} and reverse")
                if not uv and not vu:
                    raise MissingOrientation(
                        f"pair {self.vertex_id(u)}, {self.vertex_id(v)} is unoriented")

    # -- indexing -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.r * self.c

    def index(self, u: VertexId | tuple[int, int]) -> int:
        part, slot = u
        if not (1 <= part <= self.c and 1 <= slot <= self.r):
            raise IndexOutOfRange(f"vertex ({part},{slot}) outside G_{{{self.r},{self.c}}}")
        return (part - 1) * self.r + (slot - 1)

    def vertex_id(self, v: int) -> VertexId:
        return VertexId(v // self.r + 1, v % self.r + 1)

    def vertices(self) -> list[VertexId]:
        return [self.vertex_id(v) for v in range(self.n)]

    def check_part(self, i: int) -> None:
        if not 1 <= i <= self.c:
            raise IndexOutOfRange(f"part {i} outside 1..{self.c}")

    def part_mask(self, i: int) -> int:
        return ((1 << self.r) - 1) << ((i - 1) * self.r)

    # -- arcs ---------------------------------------------------------------

    def arc(self, u, v) -> bool:
        return bool((self.out[self.index(u)] >> self.index(v)) & 1)

    def in_masks(self) -> tuple[int, ...]:
        return self._in

    @cached_property
    def _in(self) -> tuple[int, ...]:
        ins = [0] * self.n
        for v, mask in enumerate(self.out):
            for u in _bits(mask):
                ins[u] |= 1 << v
        return tuple(ins)

    def arcs(self) -> list[tuple[VertexId, VertexId]]:
        return [(self.vertex_id(u), self.vertex_id(v))
                for u in range(self.n) for v in _bits(self.out[u])]

    def block(self, i: int, j: int) -> int:
        """Orientation block from part ``i`` to part ``j`` (any order, ``i != j``)."""
        self.check_part(i)
        self.check_part(j)
        if i == j:
            raise ValidationError("a block needs two distinct parts")
        r = self.r
        bits = 0
        base_i, base_j = (i - 1) * r, (j - 1) * r
        for a in range(r):
            row = self.out[base_i + a] >> base_j
            for b in range(r):
                bits = (bits << 1) | ((row >> b) & 1)
        return bits

    def blocks(self) -> list[int]:
        return [self.block(i, j) for i, j in part_pairs(self.c)]

    @classmethod
    def from_blocks(cls, r: int, c: int, blocks: Sequence[int]) -> "MultipartiteTournament":
        pairs = part_pairs(c)
        if len(blocks) != len(pairs):
            raise LengthMismatch(f"expected {len(pairs)} blocks, got {len(blocks)}")
        width = r * r
        out = [0] * (r * c)
        for (i, j), bits in zip(pairs, blocks):
            if not 0 <= bits < (1 << width):
                raise MalformedInput(f"block {bits} for pair ({i},{j}) out of range")
            for a in range(r):
                for b in range(r):
                    u, v = (i - 1) * r + a, (j - 1) * r + b
                    if (bits >> (width - 1 - (a * r + b))) & 1:
                        out[u] |= 1 << v
                    else:
                        out[v] |= 1 << u
        return cls(r, c, tuple(out))

    def __repr__(self):
        if self.r == 2:
            return f"MultipartiteTournament(r=2, c={self.c}, hex={encode(self, 'hex')!r})"
        return f"MultipartiteTournament(r={self.r}, c={self.c}, blocks={self.blocks()})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(r: int, c: int, arcs: Iterable[tuple]) -> MultipartiteTournament:
    """Validate an explicit arc list into a tournament.

    Each arc is a pair of vertices given as ``VertexId`` or ``(part, slot)``.
    """
    if c < 3 or r < 1:
        raise ValidationError(f"need c >= 3 and r >= 1, got r={r}, c={c}")
    n = r * c
    out = [0] * n

    def idx(u):
        part, slot = u
        if not (1 <= part <= c and 1 <= slot <= r):
            raise IndexOutOfRange(f"vertex ({part},{slot}) outside G_{{{r},{c}}}")
        return (part - 1) * r + (slot - 1)

    for u, v in arcs:
        a, b = idx(u), idx(v)
        if a // r == b // r:
            raise IntraPartArc(f"arc {tuple(u)}->{tuple(v)} lies inside a part")
        if (out[b] >> a) & 1:
            raise DoubleOrientation(f"both orientations of {tuple(u)}, {tuple(v)} supplied")
        out[a] |= 1 << b
    return MultipartiteTournament(r, c, tuple(out))


def tournament(c: int, arcs: Iterable[tuple[int, int]]) -> MultipartiteTournament:
    """An ordinary tournament on vertices ``1..c`` (stored as ``G_{1,c}``)."""
    return build(1, c, [((u, 1), (v, 1)) for u, v in arcs])


# -- degrees and regularity ---------------------------------------------------

def degree_info(G: MultipartiteTournament, u) -> DegreeInfo:
    v = G.index(u)
    d_out = _popcount(G.out[v])
    d_in = G.r * (G.c - 1) - d_out
    return DegreeInfo(d_out, d_in, min(d_out, d_in))


def out_degrees(G: MultipartiteTournament) -> list[int]:
    return [_popcount(m) for m in G.out]


def imbalance(G: MultipartiteTournament, v: int) -> int:
    """``d+(v) - d-(v)`` for the global index ``v``."""
    return 2 * _popcount(G.out[v]) - G.r * (G.c - 1)


def regularity(G: MultipartiteTournament, target) -> Regularity:
    """Classify a vertex (``VertexId``/tuple) or a part (int)."""
    if isinstance(target, int):
        G.check_part(target)
        regular = sum(imbalance(G, (target - 1) * G.r + s) == 0 for s in range(G.r))
        if regular == G.r:
            return Regularity.REGULAR
        return Regularity.IRREGULAR if regular == 0 else Regularity.SEMI_REGULAR
    v = G.index(target)
    return Regularity.REGULAR if imbalance(G, v) == 0 else Regularity.IRREGULAR


def is_regular(G: MultipartiteTournament) -> bool:
    return all(imbalance(G, v) == 0 for v in range(G.n))


def is_nearly_regular(G: MultipartiteTournament) -> bool:
    return all(abs(imbalance(G, v)) <= 2 for v in range(G.n))


def co_neighborhood(G: MultipartiteTournament, S, side: str = "out") -> frozenset[VertexId]:
    S = list(S)
    if not S:
        raise EmptySet("co-neighbourhood of an empty vertex set")
    if side not in ("out", "in"):
        raise ValidationError(f"side must be 'out' or 'in', not {side!r}")
    masks = G.out if side == "out" else G.in_masks()
    common = (1 << G.n) - 1
    for u in S:
        common &= masks[G.index(u)]
    return frozenset(G.vertex_id(v) for v in _bits(common))


# -- structural edits ---------------------------------------------------------

def relabel(G: MultipartiteTournament, part_perm: Sequence[int],
            slot_perms: Sequence[Sequence[int]] | None = None) -> MultipartiteTournament:
    """Relabel parts and slots.

    New part ``k`` is old part ``part_perm[k-1]``; slot ``t`` of new part ``k`` is
    old slot ``slot_perms[k-1][t-1]``.  All indices 1-based.
    """
    r, c = G.r, G.c
    if sorted(part_perm) != list(range(1, c + 1)):
        raise ValidationError(f"{part_perm} is not a permutation of 1..{c}")
    if slot_perms is None:
        slot_perms = [tuple(range(1, r + 1))] * c
    old_of_new = []
    for k in range(c):
        sp = slot_perms[k]
        if sorted(sp) != list(range(1, r + 1)):
            raise ValidationError(f"{sp} is not a permutation of 1..{r}")
        for t in range(r):
            old_of_new.append((part_perm[k] - 1) * r + sp[t] - 1)
    new_of_old = [0] * (r * c)
    for new, old in enumerate(old_of_new):
        new_of_old[old] = new
    out = []
    for new in range(r * c):
        mask = 0
        for v in _bits(G.out[old_of_new[new]]):
            mask |= 1 << new_of_old[v]
        out.append(mask)
    return MultipartiteTournament(r, c, tuple(out))


def delete_part(G: MultipartiteTournament, i: int) -> MultipartiteTournament:
    G.check_part(i)
    if G.c <= 3:
        raise TooFewParts("deleting a part would leave fewer than 3 parts")
    keep = [v for v in range(G.n) if v // G.r != i - 1]
    pos = {v: k for k, v in enumerate(keep)}
    out = []
    for v in keep:
        out.append(sum(1 << pos[u] for u in _bits(G.out[v]) if u in pos))
    return MultipartiteTournament(G.r, G.c - 1, tuple(out))


def swap_slots(G: MultipartiteTournament, i: int) -> MultipartiteTournament:
    if G.r != 2:
        raise UnsupportedPartSize("swap_slots needs r = 2")
    G.check_part(i)
    slots = [(1, 2)] * G.c
    slots[i - 1] = (2, 1)
    return relabel(G, list(range(1, G.c + 1)), slots)


# -- canonical form -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Minimum of the block sequence over all part and slot relabelings."""

    r: int
    c: int
    code: bytes

    def hex(self) -> str:
        """For ``r = 2`` this is the hex encoding of the canonical labeling."""
        if self.r != 2:
            raise UnsupportedPartSize("hex codes exist only for r = 2")
        return "".join(f"{b:x}" for b in self.code)

    def __int__(self):
        return int(self.hex(), 16)


_TRANSFORM_CACHE: dict[tuple, int] = {}


def _transform(bits: int, r: int, sp: tuple[int, ...], sq: tuple[int, ...]) -> int:
    """Block after relabeling the row part by ``sp`` and the column part by ``sq``.

    ``sp[a]`` is the old (0-based) slot placed at new slot ``a``.
    """
    key = (bits, r, sp, sq)
    hit = _TRANSFORM_CACHE.get(key)
    if hit is not None:
        return hit
    width = r * r
    res = 0
    for a in range(r):
        for b in range(r):
            bit = (bits >> (width - 1 - (sp[a] * r + sq[b]))) & 1
            res = (res << 1) | bit
    _TRANSFORM_CACHE[key] = res
    return res


def canonical_code(G: MultipartiteTournament) -> tuple[int, ...]:
    """Lexicographically least block sequence over all relabelings.

    For a fixed part permutation and a fixed slot permutation of the new first
    part, the leading digits ``(1,2), ..., (1,c)`` each depend on one further
    part's slot permutation only, so each of those is restricted to its argmin
    set before the remaining digits are compared.  The result is the exact
    minimum over all ``c! * (r!)^c`` relabelings.
    """
    r, c = G.r, G.c
    full = {(p, q): G.block(p + 1, q + 1) for p in range(c) for q in range(c) if p != q}
    slot_perms = list(itertools.permutations(range(r)))
    pairs = [(k, l) for k in range(c) for l in range(k + 1, c)]
    best = None
    for perm in itertools.permutations(range(c)):
        for s0 in slot_perms:
            head = []
            choices = []
            for l in range(1, c):
                vals = {}
                for sl in slot_perms:
                    vals[sl] = _transform(full[perm[0], perm[l]], r, s0, sl)
                low = min(vals.values())
                head.append(low)
                choices.append([sl for sl, v in vals.items() if v == low])
            if best is not None and tuple(head) > best[: c - 1]:
                continue
            for rest in itertools.product(*choices):
                sigma = (s0,) + rest
                code = tuple(
                    _transform(full[perm[k], perm[l]], r, sigma[k], sigma[l])
                    for k, l in pairs
                )
                if best is None or code < best:
                    best = code
    return best


def canonical_form(G: MultipartiteTournament) -> CanonicalForm:
    width = max(1, (G.r * G.r + 7) // 8)
    code = b"".join(d.to_bytes(width, "big") for d in canonical_code(G))
    return CanonicalForm(G.r, G.c, code)


def canonical_labeling(G: MultipartiteTournament) -> MultipartiteTournament:
    return MultipartiteTournament.from_blocks(G.r, G.c, list(canonical_code(G)))


def is_isomorphic(G: MultipartiteTournament, H: MultipartiteTournament) -> bool:
    if (G.r, G.c) != (H.r, H.c):
        return False
    if sorted(out_degrees(G)) != sorted(out_degrees(H)):
        return False
    return canonical_code(G) == canonical_code(H)


# -- serialisation ------------------------------------------------------------

FORMATS = ("hex", "structured", "dot")


def encode(G: MultipartiteTournament, fmt: str = "hex") -> str:
    if fmt == "hex":
        if G.r != 2:
            raise UnsupportedPartSize("the hex format needs r = 2")
        return "".join(f"{b:x}" for b in G.blocks())
    if fmt == "structured":
        pairs = [{"i": i, "j": j, "bits": G.block(i, j)} for i, j in part_pairs(G.c)]
        return json.dumps({"r": G.r, "c": G.c, "pairs": pairs})
    if fmt == "dot":
        return _to_dot(G)
    raise MalformedInput(f"unknown format {fmt!r}")


def _to_dot(G: MultipartiteTournament) -> str:
    lines = ["digraph G {"]
    for i in range(1, G.c + 1):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f'    label="V{i}";')
        for s in range(1, G.r + 1):
            lines.append(f'    "v{i},{s}";')
        lines.append("  }")
    for u, v in G.arcs():
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _from_dot(text: str) -> MultipartiteTournament:
    import re

    verts = set(re.findall(r'"v(\d+),(\d+)"', text))
    arcs = re.findall(r'"v(\d+),(\d+)"\s*->\s*"v(\d+),(\d+)"', text)
    if not verts:
        raise MalformedInput("no vertices found in DOT input")
    c = max(int(p) for p, _ in verts)
    r = max(int(s) for _, s in verts)
    return build(r, c, [((int(a), int(b)), (int(x), int(y))) for a, b, x, y in arcs])


def decode(text: str, fmt: str = "hex") -> MultipartiteTournament:
    if isinstance(text, bytes):
        text = text.decode()
    if fmt == "hex":
        s = text.strip()
        if not s or any(ch not in "0123456789abcdefABCDEF" for ch in s):
            raise MalformedInput(f"not a hex string: {text!r}")
        c = 3
        while c * (c - 1) // 2 < len(s):
            c += 1
        if c * (c - 1) // 2 != len(s):
            raise LengthMismatch(f"hex length {len(s)} is not C(c,2) for any c >= 3")
        return MultipartiteTournament.from_blocks(2, c, [int(ch, 16) for ch in s])
    if fmt == "structured":
        try:
            obj = json.loads(text)
            r, c = int(obj["r"]), int(obj["c"])
            given = {(int(p["i"]), int(p["j"])): int(p["bits"]) for p in obj["pairs"]}
        except (ValueError, KeyError, TypeError) as exc:
            raise MalformedInput(f"bad structured input: {exc}") from None
        if c < 3 or r < 1:
            raise ValidationError(f"need c >= 3 and r >= 1, got r={r}, c={c}")
        pairs = part_pairs(c)
        if set(given) != set(pairs):
            raise LengthMismatch("structured pairs must list every i < j exactly once")
        return MultipartiteTournament.from_blocks(r, c, [given[p] for p in pairs])
    if fmt == "dot":
        return _from_dot(text)
    raise MalformedInput(f"unknown format {fmt!r}")


def sniff_format(text: str) -> str:
    s = text.lstrip()
    if s.startswith("{"):
        return "structured"
    if s.startswith("digraph"):
        return "dot"
    return "hex"
