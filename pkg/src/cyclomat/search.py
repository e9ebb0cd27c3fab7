"""Parallel scan of primes for the two Pell congruences."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .arith import MODULUS_CAP, primes_in_range
from .pell import PREDICATES

BLOCK = 4096
DEFAULT_MAX = 10**6
# sets reported in the literature for 7 <= p <= 10^6
PUBLISHED = {"qp2": [13, 31], "pp2": [29]}


@dataclass
class SearchResult:
    predicate: str
    range: list[int]
    hits: list[int]
    scanned: int
    elapsed: float
    flags: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def default_jobs() -> int:
    env = os.environ.get("CYCLOMAT_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _scan_block(args: tuple[str, int, int]) -> tuple[list[int], int]:
    name, lo, hi = args
    pred = PREDICATES[name]
    hits, scanned = [], 0
    for p in primes_in_range(lo, hi):
        scanned += 1
        if pred(p):
            hits.append(p)
    return hits, scanned


def _compare(name: str, lo: int, hi: int, hits: list[int]) -> dict:
    if (lo, hi) != (7, DEFAULT_MAX):
        return {}
    published = PUBLISHED[name]
    above = [p for p in hits if p > 7]
    return {
        "published": published,
        "matches_published_closed": hits == published,
        "matches_published_open_at_7": above == published,
        "boundary_p7_hit": 7 in hits,
    }


def search(name: str, lo: int = 7, hi: int = DEFAULT_MAX, jobs: int | None = None) -> SearchResult:
    """Every prime p in [lo, hi] satisfying the named predicate, ascending."""
    if name not in PREDICATES:
        raise KeyError(f"unknown predicate {name!r}")
    if lo < 7 or lo > hi:
        raise ValueError("need 7 <= min <= max")
    if hi * hi > MODULUS_CAP:
        raise ValueError(f"max={hi} puts p^2 beyond the modulus cap {MODULUS_CAP}")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    blocks = [(name, a, min(a + BLOCK - 1, hi)) for a in range(lo, hi + 1, BLOCK)]
    if jobs <= 1 or len(blocks) == 1:
        parts = [_scan_block(b) for b in blocks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_block, blocks, chunksize=4))
    hits = sorted(p for h, _ in parts for p in h)
    scanned = sum(s for _, s in parts)
    return SearchResult(name, [lo, hi], hits, scanned, round(time.perf_counter() - t0, 3), _compare(name, lo, hi, hits))
