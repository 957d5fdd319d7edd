"""Verification scopes: each runs a search and audits its output."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from ..constructions import build_G1, build_G2, build_H0
from ..control import (ControlType, classify_pair, controlled_by, is_mutually_c1,
                       part_controls, part_good_to, structure_test_theorem5)
from ..core import (MultipartiteTournament, Regularity, canonical_form, delete_part,
                    encode, imbalance, is_isomorphic, part_pairs, regularity)
from ..errors import ScopeUnknown
from ..partitions import (PartitionKind, all_part_stats, census, classify_all,
                          has_st_partition)
from .config import SearchConfig
from .enumeration import EnumerationStats, IsoClassSet, enumerate_instances, first_st_index
from .extensions import enumerate_extensions, extensions_without_st
from .sampling import sample_random

C2 = ControlType.C2

# regression constants fixed by the first exhaustive runs
REGULAR_C4_CLASSES = 26
REGULAR_C5_CLASSES = 3987
NEARLY_REGULAR_C5_NO_ST = 37
H0_EXTENSIONS = 252


@dataclass
class SearchReport:
    scope: str
    config: dict = field(default_factory=dict)
    classes_found: IsoClassSet | None = None
    no_st_classes: list[str] = field(default_factory=list)
    lemma_violations: list[tuple[str, str]] = field(default_factory=list)
    wall_time: float = 0.0
    node_count: int = 0
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.lemma_violations

    def violate(self, name: str, G: MultipartiteTournament | str) -> None:
        code = G if isinstance(G, str) else encode(G, "hex")
        self.lemma_violations.append((name, code))

    def render(self, timing: bool = True) -> str:
        lines = [f"scope={self.scope}"]
        lines += [f"config.{k}={v}" for k, v in self.config.items()]
        if self.classes_found is not None:
            lines.append(f"classes={len(self.classes_found)}")
            lines.append(f"labeled={self.classes_found.labeled_count}")
        lines.append(f"no_st_classes={len(self.no_st_classes)}")
        lines += [f"no_st={h}" for h in self.no_st_classes]
        lines += [f"{k}={v}" for k, v in self.data.items()]
        lines.append(f"node_count={self.node_count}")
        if timing:
            lines.append(f"wall_time={self.wall_time:.3f}")
        lines.append(f"violations={len(self.lemma_violations)}")
        lines += [f"violation={name} {code}" for name, code in self.lemma_violations]
        lines.append("status=" + ("ok" if self.ok else "violated"))
        return "\n".join(lines) + "\n"


# -- audits shared by several scopes -----------------------------------------

def audit_no_st_instance(report: SearchReport, G: MultipartiteTournament) -> None:
    """Counting bounds every G_{2,5} without an st-partition must meet."""
    cen = census(G)
    stats = all_part_stats(G)
    if sum(s.n_part for s in stats) < 16:
        report.violate("double_counting_bound", G)
    if cen.good_count < 12:
        report.violate("lemma_good_partition", G)
    for s in stats:
        if any(v not in (0, 2) for v in s.n_vertex.values()):
            report.violate("n_vertex_values", G)
            break


def audit_g25(report: SearchReport, G: MultipartiteTournament) -> None:
    """Invariants of a nearly regular G_{2,5} from the partitions and control modules."""
    rows = classify_all(G)
    cen = census(G)
    if cen.total != 16 or cen.st_count + cen.non_strong_count != 16:
        report.violate("partition_count", G)
    stats = all_part_stats(G)
    n_u = {u: v for s in stats for u, v in s.n_vertex.items()}
    if any(v not in (0, 2) for v in n_u.values()):
        report.violate("n_vertex_values", G)
    if sum(len(cl.zero_vertices) for _, cl in rows) != sum(n_u.values()):
        report.violate("double_counting_identity", G)
    if cen.st_count == 0:
        audit_no_st_instance(report, G)
    for s in stats:
        i = s.part
        reg = regularity(G, i)
        npr = s.n_prime
        ctl = part_controls(G, i, C2)
        by = controlled_by(G, i, C2)
        if s.n_part > 4:
            report.violate("n_part_bound", G)
        if npr > s.n_part:
            report.violate("n_prime_bound", G)
        if reg is Regularity.REGULAR and (npr > 4 or (npr == 4 and not ctl)):
            report.violate("fact_1", G)
        if reg is Regularity.SEMI_REGULAR and (npr > 3 or (npr == 3 and not ctl)):
            report.violate("fact_2", G)
        if reg is Regularity.IRREGULAR and npr > 2:
            report.violate("fact_3", G)
        if (len(by) >= 2 and npr != 0) or (by and reg is Regularity.REGULAR and npr != 0) \
                or (by and reg is Regularity.SEMI_REGULAR and npr > 1):
            report.violate("fact_4", G)
    # the Observation, read with "good to all other parts"
    for u, n in n_u.items():
        others = [j for j in range(1, 6) if j != u.part]
        good = sum(bin(G.out[G.index(u)] & G.part_mask(j)).count("1") == 1 for j in others)
        if imbalance(G, G.index(u)) == 0:
            if (n == 2) != (good == 4):
                report.violate("observation_regular", G)
        elif (n == 2) != (good == 3):
            report.violate("observation_irregular", G)
    audit_control(report, G)


def audit_control(report: SearchReport, G: MultipartiteTournament) -> None:
    dual = {ControlType.C4: ControlType.ZERO, ControlType.ZERO: ControlType.C4,
            ControlType.C3: ControlType.ONE, ControlType.ONE: ControlType.C3,
            ControlType.C1: ControlType.C1, ControlType.C2: ControlType.TWO_MIXED,
            ControlType.TWO_MIXED: ControlType.C2}
    for i, j in part_pairs(G.c):
        if classify_pair(G, j, i) is not dual[classify_pair(G, i, j)]:
            report.violate("control_duality", G)
        for a, b in ((i, j), (j, i)):
            if part_good_to(G, a, b) and classify_pair(G, a, b) not in (ControlType.C1, C2):
                report.violate("good_implies_control", G)


def n_sum(G: MultipartiteTournament) -> int:
    return sum(s.n_part for s in all_part_stats(G))


def audit_g26(report: SearchReport, G: MultipartiteTournament, st: bool | None = None) -> bool:
    """Checks on one regular G_{2,6}; returns whether it has an st-partition."""
    if st is None:
        st = has_st_partition(G) is not None
    if not st:
        report.violate("theorem_st26", G)
        if not any(classify_pair(G, i, j) is C2 for i in range(1, 7) for j in range(1, 7) if i != j):
            report.violate("lemma_g26structure", G)
    for ell in range(1, 7):
        H = delete_part(G, ell)
        old = [j for j in range(1, 7) if j != ell]
        total = 0
        for s in all_part_stats(H):
            total += s.n_part
            if s.n_part == 4 and not part_controls(H, s.part, C2) \
                    and classify_pair(G, ell, old[s.part - 1]) is not C2:
                report.violate("lemma_control3", G)
        if total < 14 and not st:
            report.violate("claim_stg26", G)
        if not st and census(H).st_count == 0:
            audit_regular_claim(report, H)
            if sum(s.n_prime for s in all_part_stats(H)) != 16:
                report.violate("claim_n_prime_sum", G)
    return st


def audit_regular_claim(report: SearchReport, H: MultipartiteTournament) -> None:
    for _, cl in classify_all(H):
        if cl.kind is PartitionKind.GOOD:
            u = cl.zero_vertices[0][0]
            if imbalance(H, H.index(u)) != 0:
                report.violate("claim_regular_zero_vertex", H)


# -- scopes -------------------------------------------------------------------

def _stamp(report: SearchReport, start: float) -> SearchReport:
    report.wall_time = time.perf_counter() - start
    return report


def scope_c4_g1g2(workers: int = 1, checkpoint=None, budget=None, **_) -> SearchReport:
    start = time.perf_counter()
    cfg = SearchConfig(c=4, predicate=is_mutually_c1, worker_count=workers)
    st = EnumerationStats()
    found = enumerate_instances(cfg, checkpoint=checkpoint, node_budget=budget, stats=st)
    report = SearchReport("c4_g1g2", cfg.echo(), found, node_count=st.nodes)
    expected = {canonical_form(build_G1()).hex(), canonical_form(build_G2()).hex()}
    if set(found.codes) != expected:
        for h in sorted(set(found.codes) ^ expected):
            report.violate("lemma_g1g2", h)
    report.data["g1"] = canonical_form(build_G1()).hex()
    report.data["g2"] = canonical_form(build_G2()).hex()
    return _stamp(report, start)


def scope_c5_h0_unique(workers: int = 1, checkpoint=None, budget=None, **_) -> SearchReport:
    start = time.perf_counter()
    cfg = SearchConfig(c=5, worker_count=workers)
    st = EnumerationStats()
    found = enumerate_instances(cfg, checkpoint=checkpoint, node_budget=budget, stats=st)
    report = SearchReport("c5_h0_unique", cfg.echo(), found, node_count=st.nodes)
    if len(found) != REGULAR_C5_CLASSES:
        report.violate("regression_class_count", str(len(found)))
    reps = list(found.representatives())
    no_st = [G for G in reps if first_st_index(G) < 0]
    report.no_st_classes = [encode(G, "hex") for G in no_st]
    H0 = build_H0()
    if len(no_st) != 1:
        report.violate("theorem_h0_unique", ",".join(report.no_st_classes) or "none")
    for G in no_st:
        if has_st_partition(G) is not None:
            report.violate("st_search_disagreement", G)
        if not is_isomorphic(G, H0):
            report.violate("theorem_h0_iso", G)
        if structure_test_theorem5(G) is None:
            report.violate("theorem_st5", G)
        audit_no_st_instance(report, G)
    report.data["h0_hub"] = structure_test_theorem5(H0)
    report.data["h0_sum_n"] = n_sum(H0)
    report.data["h0_good"] = census(H0).good_count
    return _stamp(report, start)


def scope_st26_h0(**_) -> SearchReport:
    """Fast gate: every regular extension of H0 has an st-partition."""
    start = time.perf_counter()
    H0 = build_H0()
    report = SearchReport("st26_h0", {"base": encode(H0, "hex"), "window": 0})
    exts = enumerate_extensions(H0, 0)
    report.data["extensions"] = len(exts)
    if len(exts) != H0_EXTENSIONS:
        report.violate("regression_extension_count", str(len(exts)))
    compiled_total, compiled_bad = extensions_without_st(H0, 0)
    if compiled_total != len(exts):
        report.violate("extension_route_disagreement", H0)
    low = 0
    for G in exts:
        st = has_st_partition(G) is not None
        if not st:
            report.violate("theorem_st26", G)
        # Claim claimstG26 read as an implication on candidates
        for ell in range(1, 7):
            if n_sum(delete_part(G, ell)) < 14:
                low += 1
                if not st:
                    report.violate("claim_stg26", G)
    for G in compiled_bad:
        report.violate("theorem_st26", G)
    report.data["deletions_below_14"] = low
    report.data["counterexamples"] = sum(n == "theorem_st26" for n, _ in report.lemma_violations)
    H0_stats = all_part_stats(H0)
    report.data["h0_sum_n_prime"] = sum(s.n_prime for s in H0_stats)
    if sum(s.n_prime for s in H0_stats) != 16:
        report.violate("claim_n_prime_sum", H0)
    return _stamp(report, start)


def scope_st26_pipeline(workers: int = 1, checkpoint=None, budget=None,
                        full_c6: bool = False, **_) -> SearchReport:
    start = time.perf_counter()
    cfg = SearchConfig(c=5, degree_window=2, no_st_only=True, worker_count=workers)
    st = EnumerationStats()
    found = enumerate_instances(cfg, checkpoint=checkpoint, node_budget=budget, stats=st)
    report = SearchReport("st26_pipeline", cfg.echo(), found, node_count=st.nodes)
    report.no_st_classes = found.codes
    report.data["bases"] = len(found)
    total = 0
    bases_with_ext = 0
    regular_zero = 0
    for G in found.representatives():
        if has_st_partition(G) is not None:
            report.violate("st_search_disagreement", G)
        audit_no_st_instance(report, G)
        probe = SearchReport("probe")
        audit_regular_claim(probe, G)
        regular_zero += probe.ok
        n, bad = extensions_without_st(G, 0)
        total += n
        bases_with_ext += n > 0
        for E in bad:
            audit_g26(report, E, st=False)
    report.data["bases_with_extensions"] = bases_with_ext
    report.data["bases_good_zero_regular"] = regular_zero
    report.data["extensions"] = total
    report.data["counterexamples"] = sum(n == "theorem_st26" for n, _ in report.lemma_violations)
    if full_c6:
        c6 = SearchConfig(c=6, no_st_only=True, no_st_pruning=False, worker_count=workers)
        st6 = EnumerationStats()
        full = enumerate_instances(c6, node_budget=budget, stats=st6)
        report.data["full_c6_no_st_classes"] = len(full)
        report.node_count += st6.nodes
        for h in full.codes:
            report.violate("theorem_st26", h)
    return _stamp(report, start)


def scope_lemma_suite(samples: int = 10_000, seed: int = 0, g26_samples: int | None = None,
                      **_) -> SearchReport:
    start = time.perf_counter()
    g26_samples = samples if g26_samples is None else g26_samples
    cfg25 = SearchConfig(c=5, degree_window=2, seed=seed)
    cfg26 = SearchConfig(c=6, seed=seed)
    report = SearchReport("lemma_suite", {"samples": samples, "g26_samples": g26_samples,
                                          "seed": seed})
    H0 = build_H0()
    audit_g25(report, H0)
    for G in sample_random(cfg25, samples):
        audit_g25(report, G)
    no_st = enumerate_instances(SearchConfig(c=5, degree_window=2, no_st_only=True))
    for G in no_st.representatives():
        audit_g25(report, G)
    report.no_st_classes = no_st.codes
    if sum(s.n_prime for s in all_part_stats(H0)) != 16:
        report.violate("claim_n_prime_sum", H0)
    c2_free = 0
    for G in (sample_random(cfg26, g26_samples) if g26_samples else ()):
        if not any(C2 in (classify_pair(G, i, j), classify_pair(G, j, i))
                   for i, j in part_pairs(6)):
            c2_free += 1
        audit_g26(report, G)
        audit_control(report, G)
    report.data["g26_c2_free"] = c2_free
    return _stamp(report, start)


def scope_st2(workers: int = 1, **kw) -> SearchReport:
    """ST(2) = 6 as the conjunction of a c = 5 witness and an empty c = 6 pipeline."""
    start = time.perf_counter()
    lower = scope_c5_h0_unique(workers=workers)
    upper = scope_st26_pipeline(workers=workers, **kw)
    report = SearchReport("st2", {"assumed_upper_bound": 7})
    report.no_st_classes = lower.no_st_classes
    report.lemma_violations = lower.lemma_violations + upper.lemma_violations
    report.node_count = lower.node_count + upper.node_count
    report.data["c5_witnesses"] = len(lower.no_st_classes)
    report.data["c6_counterexamples"] = upper.data["counterexamples"]
    holds = len(lower.no_st_classes) > 0 and upper.data["counterexamples"] == 0 and report.ok
    if not holds and report.ok:
        report.violate("st2_value", "none")
    report.data["st2"] = 6 if holds else "undetermined"
    return _stamp(report, start)


SCOPES: dict[str, Callable[..., SearchReport]] = {
    "c4_g1g2": scope_c4_g1g2,
    "c5_h0_unique": scope_c5_h0_unique,
    "st26_h0": scope_st26_h0,
    "st26_pipeline": scope_st26_pipeline,
    "lemma_suite": scope_lemma_suite,
    "st2": scope_st2,
}


def verify_theorems(scope: str, **options) -> SearchReport:
    """Run a named verification scope.

    Options are passed to the scope: ``workers``, ``checkpoint`` and ``budget``
    for the exhaustive ones, ``samples``/``seed`` for ``lemma_suite`` and
    ``full_c6`` to add the unconditional c = 6 enumeration to the pipeline.
    """
    try:
        fn = SCOPES[scope]
    except KeyError:
        raise ScopeUnknown(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}") from None
    return fn(**options)
