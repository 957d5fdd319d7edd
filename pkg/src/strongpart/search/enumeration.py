"""Exhaustive isomorphism-class enumeration of G_{2,c} within a degree window."""

from __future__ import annotations

import json
import logging
import math
import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path

import numpy as np

from ..core import MultipartiteTournament, decode
from ..errors import ResourceBudgetExceeded
from . import kernels as K
from .config import SearchConfig

log = logging.getLogger(__name__)

SPLIT_DEPTH = 3


def hex_of(code: int, c: int) -> str:
    return f"{code:0{c * (c - 1) // 2}x}"


@dataclass
class IsoClassSet:
    """Isomorphism classes keyed by minimal hex code."""

    c: int
    automorphisms: dict[str, int] = field(default_factory=dict)

    @property
    def codes(self) -> list[str]:
        return sorted(self.automorphisms)

    def __len__(self):
        return len(self.automorphisms)

    def __contains__(self, code: str) -> bool:
        return code in self.automorphisms

    @property
    def unlabeled_count(self) -> int:
        return len(self.automorphisms)

    @property
    def labeled_count(self) -> int:
        group = math.factorial(self.c) * 2 ** self.c
        return sum(group // a for a in self.automorphisms.values())

    def representatives(self):
        for code in self.codes:
            yield decode(code, "hex")

    def filtered(self, keep) -> "IsoClassSet":
        return IsoClassSet(self.c, {h: a for h, a in self.automorphisms.items() if keep(h)})


@dataclass
class EnumerationStats:
    nodes: int = 0
    tasks: int = 0
    wall_time: float = 0.0


def _kernel_args(c: int):
    return K.pair_table(c), K.perm_table(c), K.remaining_table(c)


def _prefixes(cfg: SearchConfig) -> list[str]:
    pairs, perms, rem = _kernel_args(cfg.c)
    lo, hi = cfg.degree_bounds
    codes, _, _, _ = K.dfs(cfg.c, lo, hi, np.zeros(0, np.int64), SPLIT_DEPTH,
                           cfg.kernel_mode, 2 ** 62, pairs, perms, rem)
    return [f"{x:0{SPLIT_DEPTH}x}" for x in sorted(codes)]


def _run_task(args):
    c, lo, hi, no_st, prefix, budget = args
    pairs, perms, rem = _kernel_args(c)
    pre = np.array([int(ch, 16) for ch in prefix], np.int64)
    codes, auts, nodes, done = K.dfs(c, lo, hi, pre, len(pairs), no_st, budget,
                                     pairs, perms, rem)
    return prefix, [hex_of(x, c) for x in codes], list(auts), nodes, done


class Checkpoint:
    """JSON record of finished subtrees, keyed by their hex prefix."""

    def __init__(self, path, cfg: SearchConfig):
        self.path = Path(path) if path else None
        self.key = {k: v for k, v in cfg.echo().items() if k != "worker_count"}
        self.done: dict[str, dict] = {}
        if self.path and self.path.exists():
            data = json.loads(self.path.read_text())
            if data.get("config") == self.key:
                self.done = data["done"]
            else:
                log.warning("ignoring checkpoint %s written for another config", self.path)

    def record(self, prefix, codes, auts, nodes):
        self.done[prefix] = {"codes": codes, "auts": auts, "nodes": nodes}

    def save(self):
        if not self.path:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"config": self.key, "done": self.done}))
        os.replace(tmp, self.path)


def enumerate_instances(cfg: SearchConfig, checkpoint=None, node_budget: int | None = None,
                        stats: EnumerationStats | None = None) -> IsoClassSet:
    """Every isomorphism class in the configured family, once each.

    The tree is split at a fixed depth into independent subtrees; results are
    merged by sorting the canonical codes, so the output does not depend on
    ``worker_count``.  With ``checkpoint`` set, finished subtrees are recorded
    and skipped on a rerun.  Exceeding ``node_budget`` saves the checkpoint and
    raises ``ResourceBudgetExceeded``.
    """
    cfg.validate()
    start = time.perf_counter()
    stats = stats if stats is not None else EnumerationStats()
    lo, hi = cfg.degree_bounds
    ckpt = Checkpoint(checkpoint, cfg)
    prefixes = _prefixes(cfg)
    todo = [p for p in prefixes if p not in ckpt.done]
    budget = node_budget if node_budget is not None else 2 ** 62
    spent = sum(v["nodes"] for v in ckpt.done.values())
    tasks = [(cfg.c, lo, hi, cfg.kernel_mode, p, max(budget - spent, 0)) for p in todo]

    def consume(results):
        nonlocal spent
        for prefix, codes, auts, nodes, done in results:
            if not done:
                ckpt.save()
                raise ResourceBudgetExceeded(
                    f"node budget {budget} exhausted in subtree {prefix}", ckpt.path)
            ckpt.record(prefix, codes, auts, nodes)
            spent += nodes
            stats.tasks += 1
            if stats.tasks % 16 == 0:
                ckpt.save()

    if cfg.worker_count > 1 and len(tasks) > 1:
        with Pool(cfg.worker_count) as pool:
            consume(pool.imap_unordered(_run_task, tasks))
    else:
        # budgets are re-derived per task so a serial run stops at the first overrun
        for t in tasks:
            consume([_run_task(t[:5] + (max(budget - spent, 0),))])
    ckpt.save()

    found = IsoClassSet(cfg.c)
    for prefix in prefixes:
        entry = ckpt.done[prefix]
        for code, a in zip(entry["codes"], entry["auts"]):
            found.automorphisms[code] = a
    found.automorphisms = dict(sorted(found.automorphisms.items()))
    if cfg.predicate is not None:
        found = found.filtered(lambda h: cfg.predicate(decode(h, "hex")))
    stats.nodes = spent
    stats.wall_time = time.perf_counter() - start
    return found


def first_st_index(G: MultipartiteTournament) -> int:
    """Compiled st-partition search; index in lexicographic order or -1."""
    return int(K.first_st_partition(np.array(G.out, np.int64), G.c))
