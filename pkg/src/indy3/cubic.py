"""The reduced cubic ``P(z) = a1 z + a2 z^2 + a3 z^3`` and its dynamics.

Sign decisions on discriminants are made on Python integers, so they are
exact; floating point only enters once a branch has been chosen and a
coordinate has to be produced.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graphs import IndependenceProfile

DEFAULT_MAX_ITER = 1000
PREIMAGE_TOL = 1e-9
CLUSTER_TOL = 1e-7
FIXED_POINT_TOL = 1e-9

_OMEGA = complex(-0.5, math.sqrt(3) / 2)
_OMEGA2 = _OMEGA.conjugate()


class NotAFixedPointWarning(UserWarning):
    pass


class PreimageResidualWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Cubic:
    """Integer coefficients of ``a1 z + a2 z^2 + a3 z^3``.

    Unless ``formal`` is set, the coefficients must lie in the range a
    reduced independence polynomial of independence number three can take
    (``a1 >= 3``, ``a2 >= 3``, ``a3 >= 1``).
    """

    a1: int
    a2: int
    a3: int
    formal: bool = field(default=False, compare=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            val = getattr(self, name)
            if not isinstance(val, (int, np.integer)) or isinstance(val, bool):
                raise TypeError(f"{name} must be an integer, got {val!r}")
            if val < 1:
                raise ValueError(f"{name} must be positive, got {val}")
            object.__setattr__(self, name, int(val))
        if not self.formal and (self.a1 < 3 or self.a2 < 3):
            raise ValueError(
                f"({self.a1}, {self.a2}, {self.a3}) is below the minimum a1 >= 3, a2 >= 3; "
                "pass formal=True to analyse it anyway")

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def __str__(self):
        return f"{self.a1}z+{self.a2}z^2+{self.a3}z^3"

    def __call__(self, z):
        return evaluate(self, z)

    def derivative(self, z):
        return self.a1 + z * (2 * self.a2 + 3 * self.a3 * z)

    # integer discriminants; the classifier branches on their signs

    @property
    def critical_disc(self) -> int:
        """``a2^2 - 3 a1 a3``: sign separates non-real / double / real critical points."""
        return self.a2 ** 2 - 3 * self.a1 * self.a3

    @property
    def fixed_disc(self) -> int:
        """``a2^2 - 4 a3 (a1 - 1)``: discriminant of the non-zero fixed points."""
        return self.a2 ** 2 - 4 * self.a3 * (self.a1 - 1)

    @property
    def zero_disc(self) -> int:
        """``a2^2 - 4 a1 a3``: discriminant of the non-zero zeros."""
        return self.a2 ** 2 - 4 * self.a1 * self.a3

    @property
    def superattracting_disc(self) -> int:
        """``(a1-2) a2^2 - a3 (2a1-3)^2``; zero exactly when the larger fixed point is critical."""
        return (self.a1 - 2) * self.a2 ** 2 - self.a3 * (2 * self.a1 - 3) ** 2

    @property
    def parabolic_disc(self) -> int:
        """``(a1-3) a2^2 - 4 a3 (a1-2)^2``; zero exactly when the larger fixed point has multiplier -1."""
        return (self.a1 - 3) * self.a2 ** 2 - 4 * self.a3 * (self.a1 - 2) ** 2


def from_profile(p: IndependenceProfile, formal: bool = False) -> Cubic:
    if p.d != 3:
        raise ValueError(f"independence number must be 3, got {p.d}")
    return Cubic(*p.coeffs, formal=formal)


def evaluate(P: Cubic, z):
    """Horner evaluation; works on scalars and numpy arrays."""
    return z * (P.a1 + z * (P.a2 + z * P.a3))


def _signed_sqrt(disc: int) -> complex:
    """Square root of an integer, real or purely imaginary as its sign dictates."""
    if disc >= 0:
        r = math.isqrt(disc)
        return complex(r if r * r == disc else math.sqrt(disc), 0.0)
    r = math.isqrt(-disc)
    return complex(0.0, r if r * r == -disc else math.sqrt(-disc))


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("radius must be positive")

    def contains(self, z, tol: float = 0.0):
        return np.abs(np.asarray(z) - self.center) <= self.radius + tol


def critical_disk(P: Cubic) -> Disk:
    """Disk about ``-a2/(3a3)`` of radius ``2/sqrt(a3)``; holds K(P) whenever K(P) is connected."""
    return Disk(complex(-P.a2 / (3 * P.a3), 0.0), 2 / math.sqrt(P.a3))


@dataclass(frozen=True)
class StructureReport:
    c1: complex
    c2: complex
    critical_values: tuple[complex, complex]
    fixed_points: tuple[complex, complex, complex]
    fixed_multipliers: tuple[complex, complex, complex]
    delta: float | None
    beta: complex
    zeros: tuple[complex, complex]
    critical_disk: Disk

    @property
    def delta1(self) -> complex:
        return self.fixed_points[1]

    @property
    def delta2(self) -> complex:
        return self.fixed_points[2]


def structure_report(P: Cubic) -> StructureReport:
    """Critical points, fixed points, zeros and multipliers from their closed forms.

    Conventions: ``c1``/``delta1``/``zeta1`` take the minus sign in front of
    the square root.  When real they are therefore the smaller member of
    their pair; when non-real they have negative imaginary part.
    """
    a1, a2, a3 = P.coeffs
    s_crit = _signed_sqrt(P.critical_disc)
    c1 = (-a2 - s_crit) / (3 * a3)
    c2 = (-a2 + s_crit) / (3 * a3)
    beta = _signed_sqrt(P.fixed_disc)
    d1 = (-a2 - beta) / (2 * a3)
    d2 = (-a2 + beta) / (2 * a3)
    s_zero = _signed_sqrt(P.zero_disc)
    z1 = (-a2 - s_zero) / (2 * a3)
    z2 = (-a2 + s_zero) / (2 * a3)
    fixed = (0j, d1, d2)
    mults = tuple(complex(P.derivative(z)) for z in fixed)
    # multiplier at 0 is exact
    mults = (complex(a1, 0.0),) + mults[1:]
    delta = None
    if P.fixed_disc >= 0:
        b = beta.real
        delta = 2 * (a1 - 1) * b / (a2 + b)
    return StructureReport(
        c1=c1, c2=c2,
        critical_values=(complex(evaluate(P, c1)), complex(evaluate(P, c2))),
        fixed_points=fixed,
        fixed_multipliers=mults,
        delta=delta,
        beta=beta,
        zeros=(z1, z2),
        critical_disk=critical_disk(P),
    )


def multiplier_at(P: Cubic, z: complex) -> complex:
    """``P'(z)``; warns when ``z`` is not a fixed point to within 1e-9."""
    if abs(evaluate(P, z) - z) > FIXED_POINT_TOL:
        warnings.warn(f"{z} is not a fixed point of {P}", NotAFixedPointWarning, stacklevel=2)
    return complex(P.derivative(z))


class MonicForm(NamedTuple):
    """``Q(w) = w^3 + p w + q`` with ``Q = phi^-1 o P o phi`` and ``phi(w) = scale*w + shift``."""

    p: float
    q: float
    scale: float
    shift: float

    def __call__(self, w):
        return w * w * w + self.p * w + self.q

    def phi(self, w):
        return self.scale * w + self.shift

    def phi_inv(self, z):
        return (z - self.shift) / self.scale

    def coefficients(self) -> tuple[float, float, float, float]:
        """``(w^3, w^2, w, 1)`` coefficients."""
        return (1.0, 0.0, self.p, self.q)


def monic_centered_form(P: Cubic) -> MonicForm:
    a1, a2, a3 = P.coeffs
    scale = 1 / math.sqrt(a3)
    shift = -a2 / (3 * a3)
    # the w^2 term vanishes because P''(shift) = 0
    p = float(P.derivative(shift)) * (a3 * scale * scale)
    q = (evaluate(P, shift) - shift) / scale
    return MonicForm(p=p, q=float(q), scale=scale, shift=shift)


def escape_radius(P: Cubic) -> float:
    """Radius beyond which ``|P(z)| >= 2|z|``, so orbits leaving it go to infinity."""
    a1, a2, a3 = P.coeffs
    return (a2 + math.sqrt(a2 * a2 + 4 * a3 * (a1 + 2))) / (2 * a3)


@dataclass
class OrbitOutcome:
    """Result of forward iteration.

    ``escaped`` with ``step = k`` means ``|P^k(z0)| > escape_radius``;
    ``escaped = False`` only says the orbit stayed inside for the whole budget.
    """

    escaped: bool
    step: int | None
    exit_disk_step: int | None = None
    trace: list[complex] | None = None

    @property
    def status(self) -> str:
        return f"Escaped({self.step})" if self.escaped else "BoundedSoFar"


def iterate_orbit(P: Cubic, z0: complex, max_iter: int = DEFAULT_MAX_ITER,
                  keep_trace: bool = False) -> OrbitOutcome:
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    R = escape_radius(P)
    disk = critical_disk(P)
    z = complex(z0)
    trace = [z] if keep_trace else None
    exit_step = None
    for k in range(max_iter + 1):
        if exit_step is None and abs(z - disk.center) > disk.radius:
            exit_step = k
        if abs(z) > R:
            return OrbitOutcome(True, k, exit_step, trace)
        if k == max_iter:
            break
        z = P.a1 * z + z * z * (P.a2 + P.a3 * z)
        if keep_trace:
            trace.append(z)
    return OrbitOutcome(False, None, exit_step, trace)


class Evidence(str, enum.Enum):
    BOTH_ESCAPE = "BothEscape"
    BOTH_BOUNDED = "BothBounded"
    MIXED = "Mixed"
    INCONCLUSIVE = "Inconclusive"


def critical_orbit_evidence(P: Cubic, max_iter: int = DEFAULT_MAX_ITER) -> Evidence:
    """Numerical evidence from the two critical orbits.

    Non-real critical points are conjugate, so one orbit decides both.
    ``BOTH_BOUNDED`` only means neither orbit escaped within ``max_iter``.
    """
    rep = structure_report(P)
    if P.critical_disc <= 0:
        outcomes = [iterate_orbit(P, rep.c2, max_iter)] * 2
    else:
        outcomes = [iterate_orbit(P, rep.c1, max_iter), iterate_orbit(P, rep.c2, max_iter)]
    escaped = [o.escaped for o in outcomes]
    if all(escaped):
        return Evidence.BOTH_ESCAPE
    if not any(escaped):
        return Evidence.BOTH_BOUNDED
    return Evidence.MIXED


# -- preimages -----------------------------------------------------------------

class Preimages(NamedTuple):
    roots: np.ndarray      # shape (..., 3)
    residuals: np.ndarray  # |P(root) - w|, same shape

    @property
    def ok(self) -> np.ndarray:
        return self.residuals <= PREIMAGE_TOL


def _cardano(P: Cubic, w: np.ndarray) -> np.ndarray:
    """Roots of ``P(z) = w`` via the depressed cubic, vectorised over ``w``."""
    a1, a2, a3 = P.coeffs
    shift = a2 / (3 * a3)
    p = (3 * a3 * a1 - a2 * a2) / (3 * a3 * a3)
    q = (2 * a2 ** 3 - 9 * a1 * a2 * a3) / (27 * a3 ** 3) - w / a3
    half_q = q / 2
    sq = np.sqrt(half_q * half_q + (p / 3) ** 3 + 0j)
    # pick the sign that avoids cancellation
    c_plus = -half_q + sq
    c_minus = -half_q - sq
    C = np.where(np.abs(c_plus) >= np.abs(c_minus), c_plus, c_minus)
    u = np.abs(C) ** (1 / 3) * np.exp(1j * np.angle(C) / 3)
    safe = np.abs(u) > 0
    v = np.where(safe, -p / (3 * np.where(safe, u, 1)), 0)
    t = np.stack([u + v, _OMEGA * u + _OMEGA2 * v, _OMEGA2 * u + _OMEGA * v], axis=-1)
    return t - shift


def _newton_polish(P: Cubic, z: np.ndarray, w: np.ndarray) -> np.ndarray:
    res = evaluate(P, z) - w
    d = P.derivative(z)
    with np.errstate(divide="ignore", invalid="ignore"):
        z_new = z - res / d
    res_new = evaluate(P, z_new) - w
    better = np.isfinite(z_new) & (np.abs(res_new) < np.abs(res))
    return np.where(better, z_new, z)


def _merge_clusters(z: np.ndarray) -> np.ndarray:
    """Replace roots closer than ``CLUSTER_TOL`` by their mean (multiple roots)."""
    z = z.copy()
    r0, r1, r2 = z[..., 0], z[..., 1], z[..., 2]
    c01 = np.abs(r0 - r1) < CLUSTER_TOL
    c02 = np.abs(r0 - r2) < CLUSTER_TOL
    c12 = np.abs(r1 - r2) < CLUSTER_TOL
    triple = (c01 & c02) | (c01 & c12) | (c02 & c12)
    m3 = (r0 + r1 + r2) / 3
    m01, m02, m12 = (r0 + r1) / 2, (r0 + r2) / 2, (r1 + r2) / 2
    p01 = c01 & ~triple
    p02 = c02 & ~triple & ~p01
    p12 = c12 & ~triple & ~p01 & ~p02
    z[..., 0] = np.where(triple, m3, np.where(p01, m01, np.where(p02, m02, r0)))
    z[..., 1] = np.where(triple, m3, np.where(p01, m01, np.where(p12, m12, r1)))
    z[..., 2] = np.where(triple, m3, np.where(p02, m02, np.where(p12, m12, r2)))
    return z


def solve_preimages(P: Cubic, w) -> Preimages:
    """All three solutions of ``P(z) = w`` for each entry of ``w``.

    Closed-form roots get one Newton step (kept only if it lowers the
    residual); roots within 1e-7 of each other are merged into their mean.
    Residuals are returned rather than filtered, so nothing is dropped.
    """
    w = np.asarray(w, dtype=complex)
    z = _cardano(P, w)
    wb = w[..., None]
    z = _newton_polish(P, z, wb)
    merged = _merge_clusters(z)
    # merging helps multiple roots; keep whichever is closer for each root
    z = np.where(np.abs(evaluate(P, merged) - wb) <= np.abs(evaluate(P, z) - wb), merged, z)
    return Preimages(z, np.abs(evaluate(P, z) - wb))


def preimages(P: Cubic, w: complex) -> Preimages:
    """The three roots (with multiplicity) of ``P(z) = w``; warns on residual failure."""
    out = solve_preimages(P, np.asarray(w, dtype=complex))
    bad = np.flatnonzero(~out.ok)
    if bad.size:
        warnings.warn(f"preimages of {w}: roots {bad.tolist()} exceed residual {PREIMAGE_TOL}",
                      PreimageResidualWarning, stacklevel=2)
    return out


# -- closed-form predicate used for the non-real critical case --------------------

def critical_value_outside_disk_exact(P: Cubic) -> bool:
    """Integer form of ``|P(c) + a2/(3a3)| > 2/sqrt(a3)`` for non-real critical points.

    Equivalent to ``4a2^4 - 3a2^2 a3 s + 12 a1^3 a3^2 > 324 a3^2`` with
    ``s = a1^2 + 6a1 - 3``.
    """
    if P.critical_disc >= 0:
        raise ValueError("critical points are real")
    a1, a2, a3 = P.coeffs
    s = a1 * a1 + 6 * a1 - 3
    return 4 * a2 ** 4 - 3 * a2 ** 2 * a3 * s + 12 * a1 ** 3 * a3 ** 2 > 324 * a3 ** 2


def critical_value_outside_disk_numeric(P: Cubic) -> bool:
    rep = structure_report(P)
    return abs(rep.critical_values[1] + P.a2 / (3 * P.a3)) > 2 / math.sqrt(P.a3)
