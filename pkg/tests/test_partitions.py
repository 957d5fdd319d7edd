import random
from math import factorial

import pytest

from strongpart.constructions import attach_controlled_part, build_G2, build_H0
from strongpart.core import MultipartiteTournament, VertexId, tournament
from strongpart.errors import MalformedInput, NotATournament, PreconditionViolated
from strongpart.partitions import (
    Partition, PartitionKind, all_part_stats, census, classify_all, classify_partition,
    enumerate_partitions, folklore_check, has_st_partition, induced_tournament, is_strong,
    min_degree, n_vertex, part_stats, strongly_connected_components,
)
from strongpart.search.config import SearchConfig
from strongpart.search.sampling import random_orientation, sample_random

from oracles import brute_partitions, strong_by_bfs, tournament_classes


def as_sets(parts):
    return {frozenset(frozenset(p.class_vertices(k)) for k in range(1, p.r + 1)) for p in parts}


@pytest.mark.parametrize("r,c", [(1, 3), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_partition_count_and_brute_force(r, c):
    G = random_orientation(r, c, random.Random(r * 10 + c))
    parts = enumerate_partitions(G)
    assert len(parts) == factorial(r) ** (c - 1)
    oracle = {frozenset(frozenset(VertexId(*v) for v in cl) for cl in p) for p in brute_partitions(G)}
    assert as_sets(parts) == oracle


def test_partitions_are_lexicographic():
    texts = [p.text() for p in enumerate_partitions(build_H0())]
    assert texts == sorted(texts)
    assert texts[0] == "00000" and len(set(texts)) == 16


def test_text_round_trip():
    for p in enumerate_partitions(build_H0()):
        assert Partition.from_text(p.text()) == p
    G3 = random_orientation(3, 3, random.Random(0))
    for p in enumerate_partitions(G3):
        assert Partition.from_text(p.text(), r=3) == p
    with pytest.raises(MalformedInput):
        Partition.from_text("10000")
    with pytest.raises(MalformedInput):
        Partition.from_text("213/123/321", r=3)


def test_scc_matches_bfs_on_tournaments():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 8)
        arcs = [((a, b) if rng.random() < 0.5 else (b, a))
                for a in range(1, n + 1) for b in range(a + 1, n + 1)] if n > 1 else []
        if n < 3:
            continue
        T = tournament(n, arcs)
        comps = strongly_connected_components(T.n, T.out)
        assert sorted(v for comp in comps for v in comp) == list(range(n))
        assert is_strong(T) == strong_by_bfs(T.out, n)


def test_is_strong_requires_tournament():
    with pytest.raises(NotATournament):
        is_strong(build_H0())


def test_order_five_strong_iff_positive_min_degree():
    for out in tournament_classes(5)[5]:
        T = MultipartiteTournament(1, 5, out)
        assert is_strong(T) == (min_degree(T) > 0)
        assert folklore_check(T)


def test_h0_all_partitions_good():
    H0 = build_H0()
    rows = classify_all(H0)
    assert all(cl.kind is PartitionKind.GOOD for _, cl in rows)
    assert census(H0).line() == "total=16 st=0 nonstrong=16 good=16"
    assert has_st_partition(H0) is None


def test_g2_based_instance_has_the_va_split():
    G = attach_controlled_part(build_G2(), (1, 2))
    cen = census(G)
    assert cen.st_count + cen.non_strong_count == 16 and cen.st_count > 0
    va = Partition.from_text("01010")
    assert set(va.class_vertices(1)[:4]) == {VertexId(1, 1), VertexId(2, 2), VertexId(3, 1), VertexId(4, 2)}
    assert classify_partition(build_G2(), Partition.from_text("0101")).kind is PartitionKind.ST
    first = has_st_partition(G)
    assert first.text() == min(p.text() for p, cl in classify_all(G) if cl.kind is PartitionKind.ST)


def test_transitive_classes_are_other():
    # every arc goes from the lower-numbered part to the higher one
    G = MultipartiteTournament.from_blocks(2, 3, [15, 15, 15])
    for tau in enumerate_partitions(G):
        cl = classify_partition(G, tau)
        assert cl.kind is PartitionKind.OTHER
        assert len(cl.zero_vertices) >= 2
        assert cl.strong_classes == (False, False)


def test_induced_tournament_shape():
    H0 = build_H0()
    tau = enumerate_partitions(H0)[5]
    T = induced_tournament(H0, tau, 2)
    assert T.r == 1 and T.c == 5


def test_h0_part_stats():
    H0 = build_H0()
    stats = all_part_stats(H0)
    assert [s.n_part for s in stats] == [4, 4, 4, 4, 0]
    assert all(s.n2 == 0 and s.n_prime == s.n1 for s in stats)
    assert sum(s.n_prime for s in stats) == 16
    assert all(v in (0, 2) for s in stats for v in s.n_vertex.values())
    assert n_vertex(H0, (5, 1)) == 0


def test_part_stats_preconditions():
    with pytest.raises(PreconditionViolated):
        part_stats(build_G2(), 1)
    G = MultipartiteTournament.from_blocks(2, 5, [15] * 10)
    with pytest.raises(PreconditionViolated):
        part_stats(G, 1)


def test_double_counting_and_bounds_on_samples():
    for G in sample_random(SearchConfig(c=5, degree_window=2, seed=3), 150):
        rows = classify_all(G)
        stats = all_part_stats(G)
        assert census(G).total == 16
        assert sum(len(cl.zero_vertices) for _, cl in rows) == sum(
            v for s in stats for v in s.n_vertex.values())
        for s in stats:
            assert s.n_part <= 4
            assert s.n_prime <= s.n_part
            assert set(s.n_vertex.values()) <= {0, 2}
        if census(G).st_count == 0:
            assert census(G).good_count >= 12
            assert sum(s.n_part for s in stats) >= 16
