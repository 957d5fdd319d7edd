from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from ..core import MultipartiteTournament
from ..errors import UnsupportedConfig


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of an exhaustive or sampled search over G_{2,c}.

    ``degree_window`` bounds ``|d+ - d-|`` (0 regular, 2 nearly regular).
    ``predicate`` filters the class representatives after generation and must
    be isomorphism invariant.  ``no_st_only`` keeps only instances without an
    st-partition; ``no_st_pruning`` additionally cuts subtrees by the
    minimum-degree-0 counting bound (c = 5 only).
    """

    c: int
    degree_window: int = 0
    predicate: Optional[Callable[[MultipartiteTournament], bool]] = field(default=None, compare=False)
    no_st_only: bool = False
    no_st_pruning: bool = True
    worker_count: int = 1
    seed: int = 0

    def validate(self) -> None:
        if self.c not in (4, 5, 6):
            raise UnsupportedConfig(f"c must be 4, 5 or 6, got {self.c}")
        if self.degree_window not in (0, 2):
            raise UnsupportedConfig(f"degree_window must be 0 or 2, got {self.degree_window}")
        if self.no_st_only and self.no_st_pruning and self.c != 5:
            raise UnsupportedConfig("no-st pruning is implemented for c = 5")
        if self.worker_count < 1:
            raise UnsupportedConfig("worker_count must be positive")

    @property
    def degree_bounds(self) -> tuple[int, int]:
        deg = 2 * (self.c - 1)
        return (deg - self.degree_window) // 2, (deg + self.degree_window) // 2

    @property
    def kernel_mode(self) -> int:
        if not self.no_st_only:
            return 0
        return 1 if self.no_st_pruning else 2

    def echo(self) -> dict:
        return {
            "c": self.c,
            "degree_window": self.degree_window,
            "no_st_only": self.no_st_only,
            "no_st_pruning": self.no_st_only and self.no_st_pruning,
            "predicate": getattr(self.predicate, "__name__", None) if self.predicate else None,
            "worker_count": self.worker_count,
            "seed": self.seed,
        }
