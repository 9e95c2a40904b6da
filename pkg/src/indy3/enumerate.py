"""Exhaustive enumeration of labeled graphs on at most 8 vertices.

A graph is an integer whose bit ``e`` says whether the ``e``-th vertex pair
(in ``itertools.combinations`` order) is an edge.  A vertex subset is
independent when its pair mask has no bit in common with the graph, so
counting independent triples over a block of graphs is a handful of
vectorised AND/compare passes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .graphs import Graph

CHUNK = 1 << 22


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(n), 2))}


@lru_cache(maxsize=None)
def _subset_masks(n: int, k: int) -> np.ndarray:
    idx = _pair_index(n)
    masks = []
    for s in combinations(range(n), k):
        m = 0
        for p in combinations(s, 2):
            m |= 1 << idx[p]
        masks.append(m)
    return np.array(masks, dtype=np.uint32)


def mask_to_graph(n: int, mask: int) -> Graph:
    edges = [p for p, i in _pair_index(n).items() if mask >> i & 1]
    return Graph.from_edges(n, edges)


def _scan(n: int, start: int, stop: int):
    """Counts over graphs ``start <= mask < stop`` with independence number exactly 3.

    Returns ``(keys, counts, first_masks)`` where ``key = a2 * (C(n,3)+1) + a3``.
    """
    pairs = comb(n, 2)
    width = comb(n, 3) + 1
    m = np.arange(start, stop, dtype=np.uint32)
    a3 = np.zeros(m.shape, dtype=np.int32)
    for tm in _subset_masks(n, 3):
        a3 += (m & tm) == 0
    has4 = np.zeros(m.shape, dtype=bool)
    for qm in _subset_masks(n, 4):
        has4 |= (m & qm) == 0
    keep = (a3 >= 1) & ~has4
    a2 = pairs - np.bitwise_count(m[keep]).astype(np.int64)
    keys = a2 * width + a3[keep]
    uniq, first, counts = np.unique(keys, return_index=True, return_counts=True)
    return uniq, counts, m[keep][first]


@dataclass
class TripleCatalog:
    """Distinct ``(a2, a3)`` over labeled graphs on ``n`` vertices with independence number 3."""

    n: int
    counts: dict[tuple[int, int], int]
    first_witness: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)

    @property
    def triples(self) -> set[tuple[int, int]]:
        return set(self.counts)

    def witness(self, a2: int, a3: int) -> Graph | None:
        m = self.first_witness.get((a2, a3))
        return None if m is None else mask_to_graph(self.n, m)

    def rows(self):
        """``(n, a2, a3, labeled_count)`` sorted by ``(a2, a3)``."""
        return [(self.n, a2, a3, c) for (a2, a3), c in sorted(self.counts.items())]


def _workers(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("INDY3_THREADS", "1") or 1)
    return max(1, threads)


def enumerate_realizable_triples(n: int, include_n8: bool = False,
                                 threads: int | None = None) -> TripleCatalog:
    """Every ``(a2, a3)`` realised on ``n`` labeled vertices, with labeled counts.

    ``n = 8`` covers 2^28 graphs and must be requested with ``include_n8``.
    Work is split into fixed mask ranges and merged in range order, so the
    result does not depend on ``threads``.
    """
    if n == 8 and not include_n8:
        raise ValueError("n = 8 needs include_n8=True (2^28 graphs)")
    if not 3 <= n <= 8:
        raise ValueError(f"n must be in [3, 7] (or 8 with include_n8), got {n}")
    total = 1 << comb(n, 2)
    bounds = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    width = comb(n, 3) + 1
    workers = _workers(threads)
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(_scan, [n] * len(bounds), *zip(*bounds)))
    else:
        parts = [_scan(n, s, e) for s, e in bounds]
    counts: dict[tuple[int, int], int] = {}
    first: dict[tuple[int, int], int] = {}
    for keys, cnts, firsts in parts:
        for k, c, f in zip(keys.tolist(), cnts.tolist(), firsts.tolist()):
            t = divmod(k, width)
            counts[t] = counts.get(t, 0) + c
            first.setdefault(t, f)
    return TripleCatalog(n, counts, first)


@lru_cache(maxsize=8)
def _catalog_cached(n: int) -> TripleCatalog:
    return enumerate_realizable_triples(n, include_n8=True)


def find_witness(a1: int, a2: int, a3: int) -> Graph | None:
    """First graph (in edge-mask order) on ``a1`` vertices with profile ``(a1, a2, a3)``.

    ``None`` means no labeled graph on ``a1`` vertices has that profile.
    """
    if a1 > 8:
        raise ValueError("witness search is limited to a1 <= 8")
    if a1 < 3:
        return None
    if not 0 <= comb(a1, 2) - a2 <= comb(a1, 2):
        return None
    if a1 <= 7:
        return _catalog_cached(a1).witness(a2, a3)
    # a1 = 8: scan ranges in order and stop at the first hit
    total = 1 << comb(8, 2)
    width = comb(8, 3) + 1
    target = a2 * width + a3
    for s in range(0, total, CHUNK):
        keys, _, firsts = _scan(8, s, min(s + CHUNK, total))
        hit = np.flatnonzero(keys == target)
        if hit.size:
            return mask_to_graph(8, int(firsts[hit[0]]))
    return None
