"""Exhaustive and sampled searches over G_{2,c}."""

from .config import SearchConfig
from .enumeration import EnumerationStats, IsoClassSet, enumerate_instances, first_st_index
from .extensions import enumerate_extensions, extensions_without_st
from .sampling import random_orientation, sample_random
from .verify import SCOPES, SearchReport, verify_theorems

__all__ = [
    "SearchConfig", "EnumerationStats", "IsoClassSet", "enumerate_instances", "first_st_index",
    "enumerate_extensions", "extensions_without_st", "random_orientation", "sample_random",
    "SCOPES", "SearchReport", "verify_theorems",
]
