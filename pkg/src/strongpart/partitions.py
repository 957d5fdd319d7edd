"""Partitions of ``G_{r,c}`` into ``r`` maximal tournaments and their statistics."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .core import (
    MultipartiteTournament,
    Regularity,
    VertexId,
    _bits,
    imbalance,
    is_nearly_regular,
    regularity,
)
from .errors import IndexOutOfRange, MalformedInput, NotATournament, PreconditionViolated


@dataclass(frozen=True, order=True)
class Partition:
    """``assignment[i-1][s-1]`` is the class (1-based) of ``v_{i,s}``.

    Part 1 always carries the identity, which removes the class relabeling
    symmetry and leaves exactly ``(r!)^(c-1)`` partitions.
    """

    assignment: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        return len(self.assignment[0])

    @property
    def c(self) -> int:
        return len(self.assignment)

    def class_vertices(self, k: int) -> tuple[VertexId, ...]:
        if not 1 <= k <= self.r:
            raise IndexOutOfRange(f"class {k} outside 1..{self.r}")
        return tuple(VertexId(i + 1, sigma.index(k) + 1)
                     for i, sigma in enumerate(self.assignment))

    def text(self) -> str:
        """Partition text form.

        For ``r = 2`` a bit string: bit ``i`` is 1 iff slot 1 of part ``i`` is in
        class 2.  For larger ``r`` each part's slot-to-class map is written as
        digits and parts are separated by ``/``.
        """
        if self.r == 2:
            return "".join(str(sigma[0] - 1) for sigma in self.assignment)
        return "/".join("".join(map(str, sigma)) for sigma in self.assignment)

    @classmethod
    def from_text(cls, text: str, r: int = 2) -> "Partition":
        text = text.strip()
        if r == 2:
            if not text or set(text) - {"0", "1"} or text[0] != "0":
                raise MalformedInput(f"bad partition string {text!r}")
            return cls(tuple((1, 2) if ch == "0" else (2, 1) for ch in text))
        try:
            assignment = tuple(tuple(int(ch) for ch in part) for part in text.split("/"))
        except ValueError:
            raise MalformedInput(f"bad partition string {text!r}") from None
        ident = tuple(range(1, r + 1))
        if assignment[0] != ident or any(sorted(p) != list(ident) for p in assignment):
            raise MalformedInput(f"bad partition string {text!r}")
        return cls(assignment)


def enumerate_partitions(G: MultipartiteTournament) -> list[Partition]:
    return partitions_of_shape(G.r, G.c)


@lru_cache(maxsize=None)
def partitions_of_shape(r: int, c: int) -> list[Partition]:
    ident = tuple(range(1, r + 1))
    perms = list(itertools.permutations(ident))
    return [Partition((ident,) + rest) for rest in itertools.product(perms, repeat=c - 1)]


def _class_indices(G: MultipartiteTournament, tau: Partition, k: int) -> list[int]:
    if tau.c != G.c or tau.r != G.r:
        raise PreconditionViolated("partition shape does not match the tournament")
    return [G.index(v) for v in tau.class_vertices(k)]


def induced_tournament(G: MultipartiteTournament, tau: Partition, k: int) -> MultipartiteTournament:
    """The order-``c`` tournament on class ``k``, as a ``G_{1,c}``."""
    idx = _class_indices(G, tau, k)
    pos = {v: p for p, v in enumerate(idx)}
    out = tuple(sum(1 << pos[u] for u in _bits(G.out[v]) if u in pos) for v in idx)
    return MultipartiteTournament(1, G.c, out)


# -- strong connectivity ------------------------------------------------------

def strongly_connected_components(n: int, out: tuple[int, ...] | list[int]) -> list[list[int]]:
    """Tarjan's algorithm, iterative, over bitmask adjacency on ``0..n-1``.

    Components come out in reverse topological order.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, list(_bits(out[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, succ = work[-1]
            if succ:
                w = succ.pop()
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, list(_bits(out[w]))))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def is_strong(T: MultipartiteTournament) -> bool:
    if T.r != 1:
        raise NotATournament("is_strong expects an ordinary tournament (r = 1)")
    return len(strongly_connected_components(T.n, T.out)) == 1


def min_degree(T: MultipartiteTournament) -> int:
    n = T.n
    return min(min(d, n - 1 - d) for d in (bin(m).count("1") for m in T.out))


def folklore_check(T: MultipartiteTournament) -> bool:
    """Non-strong tournaments of order ``c`` have minimum degree at most ``(c-2)//4``."""
    return is_strong(T) or min_degree(T) <= (T.c - 2) // 4


# -- classification -------------------------------------------------------------

class PartitionKind(enum.Enum):
    ST = "st"
    GOOD = "good"
    OTHER = "other"


class PartitionClassification(NamedTuple):
    kind: PartitionKind
    zero_vertices: tuple[tuple[VertexId, int], ...]
    strong_classes: tuple[bool, ...]


def classify_partition(G: MultipartiteTournament, tau: Partition) -> PartitionClassification:
    strong = []
    zeros = []
    for k in range(1, G.r + 1):
        T = induced_tournament(G, tau, k)
        strong.append(is_strong(T))
        members = tau.class_vertices(k)
        for p, m in enumerate(T.out):
            d = bin(m).count("1")
            if d == 0 or d == T.c - 1:
                zeros.append((members[p], k))
    if all(strong):
        kind = PartitionKind.ST
    elif G.r == 2 and strong.count(False) == 1 and len(zeros) == 1:
        kind = PartitionKind.GOOD
    else:
        kind = PartitionKind.OTHER
    return PartitionClassification(kind, tuple(zeros), tuple(strong))


class PartitionCensus(NamedTuple):
    total: int
    st_count: int
    non_strong_count: int
    good_count: int

    def line(self) -> str:
        return (f"total={self.total} st={self.st_count} "
                f"nonstrong={self.non_strong_count} good={self.good_count}")


@lru_cache(maxsize=4096)
def classify_all(G: MultipartiteTournament) -> tuple[tuple[Partition, PartitionClassification], ...]:
    """Every partition with its classification, cached per instance."""
    return tuple((tau, classify_partition(G, tau)) for tau in enumerate_partitions(G))


def census(G: MultipartiteTournament) -> PartitionCensus:
    rows = classify_all(G)
    st = sum(cl.kind is PartitionKind.ST for _, cl in rows)
    good = sum(cl.kind is PartitionKind.GOOD for _, cl in rows)
    return PartitionCensus(len(rows), st, len(rows) - st, good)


def has_st_partition(G: MultipartiteTournament) -> Partition | None:
    for tau in enumerate_partitions(G):
        if all(is_strong(induced_tournament(G, tau, k)) for k in range(1, G.r + 1)):
            return tau
    return None


# -- counting statistics ------------------------------------------------------

@dataclass(frozen=True)
class PartStats:
    part: int
    n_vertex: dict
    n_part: int
    n1: int
    n2: int

    @property
    def n_prime(self) -> Fraction:
        return self.n1 + Fraction(self.n2, 2)


def _require_g25(G: MultipartiteTournament) -> None:
    if G.r != 2 or G.c != 5:
        raise PreconditionViolated("part statistics are defined for G_{2,5}")
    if not is_nearly_regular(G):
        raise PreconditionViolated("part statistics need a nearly regular G_{2,5}")


def n_vertex(G: MultipartiteTournament, u) -> int:
    """Number of partitions in which ``u`` has minimum degree 0 in its class."""
    u = VertexId(*u)
    return sum(any(z == u for z, _ in cl.zero_vertices) for _, cl in classify_all(G))


def part_stats(G: MultipartiteTournament, i: int) -> PartStats:
    _require_g25(G)
    G.check_part(i)
    members = [VertexId(i, 1), VertexId(i, 2)]
    regular = {u: imbalance(G, G.index(u)) == 0 for u in members}
    part_irregular = regularity(G, i) is Regularity.IRREGULAR
    counts = {u: 0 for u in members}
    n_part = n1 = n2 = 0
    for _, cl in classify_all(G):
        zero_here = [z for z, _ in cl.zero_vertices if z.part == i]
        for z in zero_here:
            counts[z] += 1
        if cl.kind is PartitionKind.ST or not zero_here:
            continue
        n_part += 1
        if any(regular[z] for z in zero_here) or (part_irregular and len(zero_here) == 2):
            n1 += 1
        elif len(zero_here) == 1 and not regular[zero_here[0]]:
            n2 += 1
    return PartStats(i, counts, n_part, n1, n2)


def all_part_stats(G: MultipartiteTournament) -> list[PartStats]:
    return [part_stats(G, i) for i in range(1, G.c + 1)]
