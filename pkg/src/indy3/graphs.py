"""Small simple graphs as adjacency bitsets.

A graph on ``n <= 64`` vertices is stored as a tuple of ``n`` integers;
bit ``u`` of ``adj[v]`` is set when ``u`` and ``v`` are adjacent.  Everything
here is exact integer arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

log = logging.getLogger(__name__)

MAX_VERTICES = 64


class GraphFormatError(ValueError):
    """Raised for malformed graph text."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def without_edges(self, edges) -> Graph:
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class IndependenceProfile:
    """Coefficients ``(a1, ..., ad)`` of the independence polynomial, constant term dropped."""

    coeffs: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.coeffs)

    def polynomial(self) -> list[int]:
        """Full coefficient list ``[1, a1, ..., ad]`` in ascending degree."""
        return [1, *self.coeffs]


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first non-comment line is ``n``, then ``u v`` per line.

    Lines starting with ``#`` and blank lines are skipped.  Duplicate edges
    are dropped with a warning.
    """
    n = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integers, got {raw!r}") from None
        if n is None:
            if len(nums) != 1:
                raise GraphFormatError(f"line {lineno}: first line must be the vertex count")
            n = nums[0]
            if not 1 <= n <= MAX_VERTICES:
                raise GraphFormatError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = nums
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range for n={n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            log.warning("line %d: duplicate edge %s ignored", lineno, key)
            continue
        seen.add(key)
        edges.append(key)
    if n is None:
        raise GraphFormatError("no vertex count found")
    return Graph.from_edges(n, edges)


def independence_profile(g: Graph) -> IndependenceProfile:
    """Count independent sets of every size.

    Branches on the lowest candidate vertex: either it is left out, or it is
    taken and its neighbours leave the candidate set.  Results are memoised
    on the candidate bitset, which keeps dense graphs and lexicographic
    products cheap.
    """
    adj = g.adj

    @lru_cache(maxsize=None)
    def count(cand: int) -> tuple[int, ...]:
        if not cand:
            return (1,)
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        skip = count(rest)
        take = count(rest & ~adj[v])
        size = max(len(skip), len(take) + 1)
        out = [0] * size
        for k, c in enumerate(skip):
            out[k] += c
        for k, c in enumerate(take):
            out[k + 1] += c
        return tuple(out)

    poly = count((1 << g.n) - 1)
    coeffs = list(poly[1:])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return IndependenceProfile(tuple(coeffs))


def independence_profile_bruteforce(g: Graph) -> IndependenceProfile:
    """Reference count by testing every vertex subset; only for small ``n``."""
    if g.n > 20:
        raise ValueError("brute force limited to 20 vertices")
    counts = [0] * (g.n + 1)
    for mask in range(1, 1 << g.n):
        if all(not (g.adj[v] & mask) for v in _bits(mask)):
            counts[mask.bit_count()] += 1
    coeffs = counts[1:]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return IndependenceProfile(tuple(coeffs))


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """Lexicographic product; vertex ``(a, x)`` gets index ``a * h.n + x``."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise ValueError(f"product has {n} vertices, limit is {MAX_VERTICES}")
    block = (1 << h.n) - 1
    adj = []
    for a in range(g.n):
        # every vertex in a neighbouring block, plus h-neighbours inside the own block
        outer = 0
        for b in _bits(g.adj[a]):
            outer |= block << (b * h.n)
        for x in range(h.n):
            adj.append(outer | (h.adj[x] << (a * h.n)))
    return Graph(n, tuple(adj))


# -- integer polynomials (ascending coefficient lists) -------------------------

def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_compose(outer: list[int], inner: list[int]) -> list[int]:
    """Coefficients of ``outer(inner(z))`` by Horner's scheme."""
    result = [outer[-1]]
    for c in reversed(outer[:-1]):
        result = poly_mul(result, inner)
        result[0] += c
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def composition_profile(p: IndependenceProfile) -> IndependenceProfile:
    """Profile predicted for ``G x G``: coefficients of ``I(I(z) - 1)``."""
    full = p.polynomial()
    reduced = [0, *p.coeffs]
    comp = poly_compose(full, reduced)
    return IndependenceProfile(tuple(comp[1:]))


# -- explicit families ---------------------------------------------------------

_TRIANGLE = [(0, 1), (1, 2), (0, 2)]


def make_family(name: str, n: int) -> Graph:
    """Graph families with a single independent triple.

    ``G1(n)``: ``K_n`` minus a triangle, profile ``(n, 3, 1)``.
    ``G2(n)``: ``K_{3n^2}`` minus a triangle and the edges ``v4 v_j`` for
    ``j = 5..3n+1``, profile ``(3n^2, 3n, 1)``.
    ``G3(n)``: ``K_{n^2+1}`` minus a triangle and the edges ``v4 v_j`` for
    ``j = 5..2n+1``, profile ``(n^2+1, 2n, 1)``.
    Vertices ``v1, v2, ...`` are indices ``0, 1, ...``.
    """
    name = name.upper()
    if name == "G1":
        if not 3 < n <= MAX_VERTICES:
            raise ValueError(f"G1 needs 3 < n <= {MAX_VERTICES}, got {n}")
        return Graph.complete(n).without_edges(_TRIANGLE)
    if name == "G2":
        size = 3 * n * n
        if n <= 1 or size > MAX_VERTICES:
            raise ValueError(f"G2 needs n > 1 and 3n^2 <= {MAX_VERTICES}, got n={n}")
        extra = [(3, j - 1) for j in range(5, 3 * n + 2)]
        return Graph.complete(size).without_edges(_TRIANGLE + extra)
    if name == "G3":
        size = n * n + 1
        if n <= 1 or size > MAX_VERTICES:
            raise ValueError(f"G3 needs n > 1 and n^2+1 <= {MAX_VERTICES}, got n={n}")
        extra = [(3, j - 1) for j in range(5, 2 * n + 2)]
        return Graph.complete(size).without_edges(_TRIANGLE + extra)
    raise ValueError(f"unknown family {name!r}; expected G1, G2 or G3")


def family_profile(name: str, n: int) -> tuple[int, int, int]:
    """Closed-form profile of a family member (no graph built, so any ``n``)."""
    name = name.upper()
    if name == "G1":
        return (n, 3, 1)
    if name == "G2":
        return (3 * n * n, 3 * n, 1)
    if name == "G3":
        return (n * n + 1, 2 * n, 1)
    raise ValueError(f"unknown family {name!r}")


def independent_triples(g: Graph) -> list[tuple[int, int, int]]:
    return [t for t in combinations(range(g.n), 3)
            if not (g.has_edge(t[0], t[1]) or g.has_edge(t[1], t[2]) or g.has_edge(t[0], t[2]))]
