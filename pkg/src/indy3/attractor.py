"""Finite approximations of independence attractors and Julia sets.

The roots of ``I_{G^m}`` are the solutions of ``P^m(z) = -1``, which we get
by solving ``P(z) = w`` backwards from ``w = -1``.  Nothing here claims to
compute the limit set itself; every point set records how it was produced
and how well its points satisfy their defining equation.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, QhullError, cKDTree

from .classify import Composition, attractor_composition
from .cubic import Cubic, critical_disk, escape_radius, evaluate, solve_preimages
from .rng import XorShiftStreams

log = logging.getLogger(__name__)

MAX_FULL_DEPTH = 13
MAX_SAMPLE_DEPTH = 64
ROOT_RESIDUAL_TOL = 1e-6
MERGE_TOL = 1e-9
BURN_IN = 50
# random mode merges complete root levels only this deep
ROOT_UNION_SAMPLE_DEPTH = 8


@dataclass
class PointSet:
    """A finite multiset of complex points, stored sorted by ``(re, im)``.

    ``mult`` counts how many raw points were merged into each stored point;
    ``residuals`` (if present) is the defining-equation residual per point.
    """

    points: np.ndarray
    mult: np.ndarray | None = None
    residuals: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=complex).ravel()
        if self.mult is None:
            self.mult = np.ones(self.points.shape, dtype=np.int64)
        self.mult = np.asarray(self.mult, dtype=np.int64).ravel()
        if self.residuals is not None:
            self.residuals = np.asarray(self.residuals, dtype=float).ravel()
        order = np.lexsort((self.points.imag, self.points.real))
        self.points = self.points[order]
        self.mult = self.mult[order]
        if self.residuals is not None:
            self.residuals = self.residuals[order]

    def __len__(self):
        return self.points.size

    @property
    def total(self) -> int:
        """Size counting multiplicity."""
        return int(self.mult.sum())

    @property
    def flagged(self) -> np.ndarray:
        if self.residuals is None:
            return np.zeros(self.points.shape, dtype=bool)
        return ~(self.residuals <= ROOT_RESIDUAL_TOL)


def merge_points(points: np.ndarray, mult: np.ndarray | None = None,
                 residuals: np.ndarray | None = None, tol: float = MERGE_TOL):
    """Collapse points that agree to ``tol`` (by snapping to a ``tol`` grid)."""
    points = np.asarray(points, dtype=complex).ravel()
    if mult is None:
        mult = np.ones(points.shape, dtype=np.int64)
    if points.size == 0:
        return points, mult, residuals
    keys = np.stack([np.round(points.real / tol), np.round(points.imag / tol)], axis=1)
    uniq, first, inv = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    inv = inv.ravel()
    new_mult = np.bincount(inv, weights=mult, minlength=uniq.shape[0]).astype(np.int64)
    new_res = None
    if residuals is not None:
        new_res = np.zeros(uniq.shape[0])
        np.maximum.at(new_res, inv, residuals)
    return points[first], new_mult, new_res


def forward_residual(P: Cubic, z: np.ndarray, m: int, target: complex = -1) -> np.ndarray:
    """``|P^m(z) - target|`` by fresh forward iteration."""
    w = np.asarray(z, dtype=complex)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(m):
            w = evaluate(P, w)
        return np.abs(w - target)


def _check_residuals(ps: PointSet, what: str) -> PointSet:
    bad = int(ps.flagged.sum())
    if bad:
        log.warning("%s: %d of %d points exceed residual %.0e", what, bad, len(ps), ROOT_RESIDUAL_TOL)
    ps.meta["flagged"] = bad
    return ps


def _levels(P: Cubic, m: int):
    """Yield ``(k, points, mult)`` for the root levels ``k = 1..m``."""
    pts = np.array([-1 + 0j])
    mult = np.array([1], dtype=np.int64)
    for k in range(1, m + 1):
        pre = solve_preimages(P, pts)
        pts = pre.roots.ravel()
        mult = np.repeat(mult, 3)
        pts, mult, _ = merge_points(pts, mult)
        yield k, pts, mult


def roots_of_level(P: Cubic, m: int) -> PointSet:
    """Solutions of ``P^m(z) = -1``, i.e. the independence roots of the ``m``-fold product.

    Multiplicities add up to ``3^m``.  Each point's residual is recomputed by
    forward iteration; points above 1e-6 are flagged and logged, never dropped.
    """
    if not 1 <= m <= MAX_FULL_DEPTH:
        raise ValueError(f"depth must be in [1, {MAX_FULL_DEPTH}], got {m}")
    for _, pts, mult in _levels(P, m):
        pass
    res = forward_residual(P, pts, m)
    ps = PointSet(pts, mult, res, {"cubic": P.coeffs, "mode": "level", "depth": m})
    return _check_residuals(ps, f"roots_of_level({P}, {m})")


def _root_union(P: Cubic, depth: int) -> PointSet:
    pts, mult, res = [], [], []
    for k, p, mu in _levels(P, depth):
        pts.append(p)
        mult.append(mu)
        res.append(forward_residual(P, p, k))
    p, mu, r = merge_points(np.concatenate(pts), np.concatenate(mult), np.concatenate(res))
    return PointSet(p, mu, r)


def random_backward_walks(P: Cubic, depth: int, count: int, seed: int, start: complex = -1,
                          step_residuals: bool = False):
    """Endpoints of ``count`` independent backward walks of length ``depth``.

    At each step one of the three preimages is chosen uniformly from stream
    ``i`` of the seeded generator (see :mod:`indy3.rng`).  With
    ``step_residuals`` the worst ``|P(z_k) - z_{k-1}|`` along each walk is
    returned as well.
    """
    rng = XorShiftStreams(seed, count)
    z = np.full(count, complex(start))
    rows = np.arange(count)
    worst = np.zeros(count)
    for _ in range(depth):
        roots = solve_preimages(P, z).roots
        nxt = roots[rows, rng.choice3()]
        if step_residuals:
            worst = np.maximum(worst, np.abs(evaluate(P, nxt) - z))
        z = nxt
    return (z, worst) if step_residuals else z


def approximate_attractor(P: Cubic, depth: int = 10, sample: int | None = None,
                          seed: int = 0) -> PointSet:
    """Finite stand-in for the independence attractor.

    With ``sample=None`` this is the full level ``depth``.  Otherwise it is
    ``sample`` random backward walks of length ``depth`` from -1.  When -1 is
    a double root of ``I_G`` the roots of every level persist in the
    attractor, so they are merged in: all levels up to ``depth`` in full
    mode, up to ``min(depth, 8)`` in sampling mode.

    Residuals are ``|P^depth(z) + 1|`` in full mode and the worst single
    preimage step in sampling mode.
    """
    if sample is None:
        if not 1 <= depth <= MAX_FULL_DEPTH:
            raise ValueError(f"full-tree depth must be in [1, {MAX_FULL_DEPTH}], got {depth}")
        base = roots_of_level(P, depth)
        mode = "full"
    else:
        if not 1 <= depth <= MAX_SAMPLE_DEPTH:
            raise ValueError(f"sample depth must be in [1, {MAX_SAMPLE_DEPTH}], got {depth}")
        if sample < 1:
            raise ValueError("sample count must be positive")
        # P^depth is far too expanding to re-evaluate at depth 40, so each
        # walk is certified step by step instead
        z, res = random_backward_walks(P, depth, sample, seed, step_residuals=True)
        p, mu, r = merge_points(z, residuals=res)
        base = PointSet(p, mu, r)
        mode = "sample"
    meta = {"cubic": P.coeffs, "mode": mode, "depth": depth, "sample": sample, "seed": seed}
    if attractor_composition(P) is Composition.JULIA_PLUS_ROOT_UNION:
        union = _root_union(P, depth if sample is None else min(depth, ROOT_UNION_SAMPLE_DEPTH))
        p, mu, r = merge_points(np.concatenate([base.points, union.points]),
                                np.concatenate([base.mult, union.mult]),
                                np.concatenate([base.residuals, union.residuals]))
        base = PointSet(p, mu, r)
        meta["root_union"] = True
    base.meta = meta
    return _check_residuals(base, f"approximate_attractor({P})")


def julia_inverse_sample(P: Cubic, iterations: int, seed: int = 0) -> PointSet:
    """One random backward orbit from the repelling fixed point 0.

    The first 50 points are burn-in and discarded, leaving ``iterations - 50``.
    """
    if iterations < 100:
        raise ValueError("iterations must be >= 100")
    rng = XorShiftStreams(seed, 1)
    out = np.empty(iterations, dtype=complex)
    z = np.array([0j])
    for i in range(iterations):
        roots = solve_preimages(P, z).roots[0]
        z = roots[rng.choice3()]
        out[i] = z[0]
    kept = out[BURN_IN:]
    return PointSet(kept, meta={"cubic": P.coeffs, "mode": "julia", "iterations": iterations,
                                "seed": seed})


# -- set geometry ----------------------------------------------------------------

def _as_points(a) -> np.ndarray:
    pts = a.points if isinstance(a, PointSet) else np.asarray(a, dtype=complex).ravel()
    if pts.size == 0:
        raise ValueError("point set is empty")
    return merge_points(pts)[0]


def _nearest_brute(a: np.ndarray, b: np.ndarray, block: int = 2048) -> np.ndarray:
    out = np.empty(a.size)
    for s in range(0, a.size, block):
        out[s:s + block] = np.abs(a[s:s + block, None] - b[None, :]).min(axis=1)
    return out


def _nearest_tree(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    tree = cKDTree(np.column_stack([b.real, b.imag]))
    _, idx = tree.query(np.column_stack([a.real, a.imag]))
    # distances recomputed the same way the brute-force path does
    return np.abs(a - b[idx])


def hausdorff_distance(A, B, method: str = "auto") -> float:
    """Symmetric Hausdorff distance between two finite point sets.

    ``method`` is ``"brute"``, ``"tree"`` or ``"auto"`` (tree once the pair
    count passes 4e6); both give the same value.
    """
    a, b = _as_points(A), _as_points(B)
    if method == "auto":
        method = "tree" if a.size * b.size > 4_000_000 else "brute"
    nearest = {"brute": _nearest_brute, "tree": _nearest_tree}[method]
    return float(max(nearest(a, b).max(), nearest(b, a).max()))


def diameter(A) -> float:
    """Largest pairwise distance; only convex hull vertices are compared for big sets."""
    pts = _as_points(A)
    if pts.size > 2000:
        xy = np.column_stack([pts.real, pts.imag])
        try:
            hull = ConvexHull(xy)
        except QhullError:
            hull = ConvexHull(xy, qhull_options="QJ")
        pts = pts[hull.vertices]
    best = 0.0
    for s in range(0, pts.size, 2048):
        best = max(best, float(np.abs(pts[s:s + 2048, None] - pts[None, :]).max()))
    return best


# -- escape-time grids ---------------------------------------------------------------

@dataclass(frozen=True)
class Window:
    center: complex
    width: float
    height: float

    def __post_init__(self):
        if not (self.width > 0 and self.height > 0):
            raise ValueError("window must have positive width and height")


def default_window(P: Cubic) -> Window:
    disk = critical_disk(P)
    side = 2 * 1.5 * disk.radius
    return Window(disk.center, side, side)


@dataclass
class EscapeGrid:
    window: Window
    counts: np.ndarray  # shape (h, w); row 0 is the top edge
    max_iter: int

    @property
    def resolution(self) -> tuple[int, int]:
        h, w = self.counts.shape
        return w, h


def pixel_centers(window: Window, w: int, h: int) -> np.ndarray:
    """Complex pixel centres, row 0 at the top.

    Coordinates are built so that a window centred on the real axis gives
    rows ``i`` and ``h-1-i`` exactly conjugate values.
    """
    cx, cy = window.center.real, window.center.imag
    x = cx + window.width * (2 * np.arange(w) - (w - 1)) / (2 * w)
    y = cy + window.height * ((h - 1) - 2 * np.arange(h)) / (2 * h)
    return x[None, :] + 1j * y[:, None]


def escape_time_grid(P: Cubic, window: Window | None = None, resolution: tuple[int, int] = (400, 400),
                     max_iter: int = 200) -> EscapeGrid:
    """First step at which each pixel's orbit exceeds the escape radius (``max_iter`` if never)."""
    w, h = resolution
    if w < 1 or h < 1:
        raise ValueError("resolution must be at least 1x1")
    if window is None:
        window = default_window(P)
    R = escape_radius(P)
    z = pixel_centers(window, w, h)
    counts = np.full(z.shape, max_iter, dtype=np.int64)
    alive = np.ones(z.shape, dtype=bool)
    for k in range(max_iter):
        out = alive & (np.abs(z) > R)
        counts[out] = k
        alive &= ~out
        if not alive.any():
            break
        z[alive] = evaluate(P, z[alive])
    return EscapeGrid(window, counts, max_iter)


def grid_to_gray(grid: EscapeGrid) -> np.ndarray:
    """8-bit shades, linear in the count, with ``max_iter`` mapped to 0 (black interior)."""
    c = grid.counts.astype(float)
    return np.rint(255 * (grid.max_iter - c) / grid.max_iter).astype(np.uint8)


def circle_sample(center: complex, radius: float, n: int) -> PointSet:
    t = 2 * math.pi * np.arange(n) / n
    return PointSet(center + radius * np.exp(1j * t))
