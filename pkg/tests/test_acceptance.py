"""Acceptance criteria, one check each.

Run under pytest, or directly with ``python tests/test_acceptance.py`` to get
one PASS/FAIL line per criterion.  All comparisons are exact integer or set
equalities; the only tolerance is the 60 s wall-time cap on the H0 gate.
"""

from __future__ import annotations

import io
import os
import random
import sys
import time
from math import factorial

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from oracles import (brute_partitions, brute_tournament_class_count,  # noqa: E402
                     labeled_tournament_tally, tournament_classes)
from strongpart.cli import run  # noqa: E402
from strongpart.constructions import build_G1, build_G2, build_H0, named  # noqa: E402
from strongpart.core import MultipartiteTournament, canonical_form, decode, encode, is_isomorphic  # noqa: E402
from strongpart.partitions import enumerate_partitions, folklore_check, is_strong, min_degree  # noqa: E402
from strongpart.search import verify_theorems  # noqa: E402
from strongpart.search.sampling import random_orientation  # noqa: E402

H0_GATE_SECONDS = 60.0
SAMPLES = 10_000
TOURNAMENT_CLASS_COUNTS = {3: 2, 4: 4, 5: 12, 6: 56, 7: 456}


def criterion_1():
    rng = random.Random(2024)
    for r, c in [(2, 4), (2, 5), (2, 6), (3, 4)]:
        for _ in range(100):
            G = random_orientation(r, c, rng)
            parts = enumerate_partitions(G)
            if len(parts) != factorial(r) ** (c - 1):
                return False, f"(r,c)=({r},{c}) gave {len(parts)}"
            if len(brute_partitions(G)) != len(parts):
                return False, f"(r,c)=({r},{c}) disagrees with the brute-force oracle"
    return True, "400 instances; counts 8, 16, 32, 216 match (r!)^(c-1) and the brute-force oracle"


def criterion_2():
    classes = tournament_classes(7)
    for n in range(3, 8):
        if len(classes[n]) != TOURNAMENT_CLASS_COUNTS[n]:
            return False, f"order {n}: {len(classes[n])} classes"
    for n in range(3, 6):
        if brute_tournament_class_count(n) != TOURNAMENT_CLASS_COUNTS[n]:
            return False, f"order {n}: brute-force count disagrees"
    for n in range(3, 7):
        if labeled_tournament_tally(classes[n], n) != 2 ** (n * (n - 1) // 2):
            return False, f"order {n}: labeled tally mismatch"
    for n in range(3, 8):
        for out in classes[n]:
            T = MultipartiteTournament(1, n, out)
            if not folklore_check(T):
                return False, f"folklore bound fails at order {n}"
            if n == 5 and is_strong(T) != (min_degree(T) > 0):
                return False, "order 5 biconditional fails"
    return True, "class counts 2,4,12,56,456; folklore bound and order-5 iff hold"


def criterion_3():
    rep = verify_theorems("c4_g1g2")
    want = {canonical_form(build_G1()).hex(), canonical_form(build_G2()).hex()}
    ok = rep.ok and set(rep.classes_found.codes) == want
    return ok, f"classes={len(rep.classes_found)} violations={len(rep.lemma_violations)}"


def criterion_4():
    rep = verify_theorems("c5_h0_unique")
    H0 = build_H0()
    ok = (rep.ok and len(rep.no_st_classes) == 1
          and is_isomorphic(decode(rep.no_st_classes[0]), H0)
          and rep.data["h0_hub"] == 5 and rep.data["h0_sum_n"] == 16 and rep.data["h0_good"] == 16)
    return ok, (f"classes={len(rep.classes_found)} no_st={rep.no_st_classes} "
                f"sum_n={rep.data['h0_sum_n']} good={rep.data['h0_good']} "
                f"time={rep.wall_time:.1f}s")


def criterion_5():
    t = time.perf_counter()
    gate = verify_theorems("st26_h0")
    gate_time = time.perf_counter() - t
    out = io.StringIO()
    code = run(["verify", "--scope", "st26_pipeline"], out)
    fields = dict(line.split("=", 1) for line in out.getvalue().splitlines() if "=" in line)
    ok = (gate.ok and gate_time < H0_GATE_SECONDS and code == 0
          and fields.get("counterexamples") == "0")
    return ok, (f"H0 gate {gate.data['extensions']} extensions in {gate_time:.1f}s; pipeline "
                f"bases={fields.get('bases')} extensions={fields.get('extensions')} "
                f"counterexamples={fields.get('counterexamples')} exit={code}")


def criterion_6():
    rep = verify_theorems("lemma_suite", samples=SAMPLES, seed=0)
    return rep.ok, (f"{SAMPLES} G(2,5) + {SAMPLES} G(2,6) samples, "
                    f"violations={len(rep.lemma_violations)} time={rep.wall_time:.0f}s")


def criterion_7():
    golden = {"g1": "969999", "g2": "999666", "h0": "96959959aa"}
    tours = {"t1": [1, 0, 1, 1, 1, 1], "t2": [1, 0, 0, 1, 0, 0],
             "t3": [1, 1, 1, 0, 0, 0], "t4": [1, 0, 0, 1, 0, 1]}
    if any(encode(named(k), "hex") != v for k, v in golden.items()):
        return False, "hex golden mismatch"
    if any(decode(encode(named(k), "structured"), "structured").blocks() != v for k, v in tours.items()):
        return False, "structured golden mismatch"
    rng = random.Random(7)
    for fmt in ("hex", "structured", "dot"):
        for _ in range(1000):
            r = 2 if fmt == "hex" else rng.randint(1, 3)
            G = random_orientation(r, rng.randint(3, 6), rng)
            if decode(encode(G, fmt), fmt) != G:
                return False, f"{fmt} round trip failed"
    return True, "goldens match; 3000 round trips exact"


def criterion_8():
    rep = verify_theorems("st2")
    ok = rep.ok and rep.data["st2"] == 6 and rep.data["c5_witnesses"] >= 1 \
        and rep.data["c6_counterexamples"] == 0
    return ok, (f"c5 witnesses={rep.data['c5_witnesses']} c6 counterexamples="
                f"{rep.data['c6_counterexamples']} st2={rep.data['st2']} (upper bound 7 assumed)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


def report_line(k, ok, detail):
    return f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + report_line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for k, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failed += not ok
        print(report_line(k, ok, detail), flush=True)
    sys.exit(1 if failed else 0)
