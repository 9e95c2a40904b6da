"""Exact connectedness verdicts for independence attractors of cubic profiles.

Every branch below is an integer comparison on ``(a1, a2, a3)``.  Critical
orbit iteration is attached as evidence only and never changes a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from .cubic import (
    DEFAULT_MAX_ITER, Cubic, Evidence, StructureReport, critical_orbit_evidence,
    structure_report,
)
from .graphs import Graph, family_profile, make_family, MAX_VERTICES


class Taxonomy(str, enum.Enum):
    BICRITICALLY_NON_REAL = "BicriticallyNonReal"
    UNICRITICAL = "Unicritical"
    BICRITICALLY_REAL = "BicriticallyReal"


class Verdict(str, enum.Enum):
    CONNECTED = "Connected"
    TOTALLY_DISCONNECTED = "TotallyDisconnected"
    DISCONNECTED_NOT_TOTALLY = "DisconnectedNotTotally"
    DISCONNECTED_TOTALITY_UNRESOLVED = "DisconnectedTotalityUnresolved"
    EXPLICIT_SET = "ExplicitSet"


class Composition(str, enum.Enum):
    JULIA_ONLY = "JuliaOnly"
    JULIA_PLUS_ROOT_UNION = "JuliaPlusRootUnion"


class Realizable(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


class BuffScreen(str, enum.Enum):
    FORCES_DISCONNECTED = "ForcesDisconnected"
    NO_INFORMATION = "NoInformation"


UNICRITICAL_EXPLICIT = "{-1} U {z : |z+1| = 1}"


def taxonomy_of(P: Cubic) -> Taxonomy:
    d = P.critical_disc
    if d < 0:
        return Taxonomy.BICRITICALLY_NON_REAL
    if d == 0:
        return Taxonomy.UNICRITICAL
    return Taxonomy.BICRITICALLY_REAL


def attractor_composition(P: Cubic) -> Composition:
    """The attractor picks up the roots of every iterate exactly when -1 is a double root of I."""
    if P.a2 == 2 * P.a1 - 3 and P.a3 == P.a1 - 2:
        return Composition.JULIA_PLUS_ROOT_UNION
    return Composition.JULIA_ONLY


def buff_screen(P: Cubic) -> BuffScreen:
    """0 is fixed with multiplier a1; a connected filled Julia set caps |P'| at 9 on it."""
    return BuffScreen.FORCES_DISCONNECTED if P.a1 > 9 else BuffScreen.NO_INFORMATION


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def decide(P: Cubic) -> tuple[Taxonomy, str, Verdict]:
    """The integer decision tree: ``(taxonomy, subcase label, verdict)``."""
    a1, a2, a3 = P.coeffs
    tax = taxonomy_of(P)
    if tax is Taxonomy.BICRITICALLY_NON_REAL:
        return tax, "BNR", Verdict.TOTALLY_DISCONNECTED
    if tax is Taxonomy.UNICRITICAL:
        if a1 == 3:
            return tax, "U-a1=3", Verdict.EXPLICIT_SET
        if a1 == 4:
            return tax, "U-a1=4-formal", Verdict.TOTALLY_DISCONNECTED
        return tax, "U-a1>4", Verdict.TOTALLY_DISCONNECTED

    fixed = _sign(P.fixed_disc)
    if fixed < 0:
        return tax, "BR-nonreal-fp", Verdict.TOTALLY_DISCONNECTED
    if fixed == 0:
        v = Verdict.CONNECTED if a1 == 5 else Verdict.DISCONNECTED_NOT_TOTALLY
        return tax, "BR-1fp", v

    zero = _sign(P.zero_disc)
    if zero == 0:
        v = Verdict.CONNECTED if a1 <= 9 else Verdict.TOTALLY_DISCONNECTED
        return tax, "BR-2fp-caseII", v
    if zero > 0:
        return tax, "BR-2fp-caseIII", Verdict.DISCONNECTED_TOTALITY_UNRESOLVED

    first = _sign(P.superattracting_disc)
    second = _sign(P.parabolic_disc)
    if first < 0:
        return tax, "BR-2fp-caseI-(1)(a)", Verdict.DISCONNECTED_NOT_TOTALLY
    if first == 0:
        return tax, "BR-2fp-caseI-(1)(b)", Verdict.DISCONNECTED_NOT_TOTALLY
    if second < 0:
        return tax, "BR-2fp-caseI-(1)(c)", Verdict.DISCONNECTED_NOT_TOTALLY
    if second == 0:
        v = Verdict.CONNECTED if a1 <= 7 else Verdict.DISCONNECTED_NOT_TOTALLY
        return tax, "BR-2fp-caseI-(1)(d)", v
    if (a1, a2, a3) in {(7, 9, 3), (8, 11, 4)}:
        return tax, "BR-2fp-caseI-(1)(e)", Verdict.CONNECTED
    return tax, "BR-2fp-caseI-(1)(e)", Verdict.DISCONNECTED_TOTALITY_UNRESOLVED


# -- feasibility ---------------------------------------------------------------

class FeasibilityStatus(str, enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Feasibility:
    status: FeasibilityStatus
    reason: str
    witness: Graph | None = field(default=None, compare=False)


# (a1, a2) -> allowed a3 values when a2 is at the top of its range
_TOP_OF_RANGE = {
    (5, 8): {4},
    (6, 12): {8},
    (7, 16): {12},
    (8, 21): {18},
    (8, 20): {15, 16},
}
_A1_FOUR = {(3, 1), (4, 1), (5, 2)}


def feasibility_rules(P: Cubic) -> Feasibility:
    """Necessary conditions only: range bounds, the Turan bound, and the small-n lists."""
    a1, a2, a3 = P.coeffs
    infeasible = FeasibilityStatus.INFEASIBLE
    if a1 < 3:
        return Feasibility(infeasible, "a1 < 3: no independent triple")
    if not 3 <= a2 <= comb(a1, 2):
        return Feasibility(infeasible, f"a2 outside [3, C(a1,2)] = [3, {comb(a1, 2)}]")
    if not 1 <= a3 <= comb(a1, 3):
        return Feasibility(infeasible, f"a3 outside [1, C(a1,3)] = [1, {comb(a1, 3)}]")
    if a1 == 3:
        if (a2, a3) == (3, 1):
            return Feasibility(FeasibilityStatus.FEASIBLE, "empty graph on 3 vertices",
                               Graph.empty(3))
        return Feasibility(infeasible, "a1 = 3 forces (a2, a3) = (3, 1)")
    if 3 * a2 > a1 * a1:
        return Feasibility(infeasible, f"Turan bound a2 <= a1^2/3 violated ({a2} > {a1 * a1 / 3:.4g})")
    if a1 == 4 and (a2, a3) not in _A1_FOUR:
        return Feasibility(infeasible, "a1 = 4 allows only (a2, a3) in {(3,1), (4,1), (5,2)}")
    allowed = _TOP_OF_RANGE.get((a1, a2))
    if allowed is not None and a3 not in allowed:
        return Feasibility(infeasible, f"a1 = {a1}, a2 = {a2} forces a3 in {sorted(allowed)}")
    return Feasibility(FeasibilityStatus.UNKNOWN, "no rule excludes it")


def _family_witness(P: Cubic) -> Graph | None:
    a1, a2, a3 = P.coeffs
    if a3 != 1:
        return None
    for name in ("G1", "G2", "G3"):
        for n in range(2, MAX_VERTICES + 1):
            prof = family_profile(name, n)
            if prof[0] > MAX_VERTICES:
                break
            if prof == (a1, a2, a3):
                try:
                    return make_family(name, n)
                except ValueError:
                    pass
    return None


def feasibility(P: Cubic, search: bool = True, search_limit: int = 7) -> Feasibility:
    """Decide whether some graph has reduced independence polynomial ``P``.

    Rules run first.  If they do not exclude the triple, a known family
    member is tried as a witness, and for ``a1 <= search_limit`` an
    exhaustive witness search settles the question either way.
    """
    res = feasibility_rules(P)
    if res.status is not FeasibilityStatus.UNKNOWN:
        return res
    w = _family_witness(P)
    if w is not None:
        return Feasibility(FeasibilityStatus.FEASIBLE, "explicit family member", w)
    if search and P.a1 <= min(search_limit, 8):
        from .enumerate import find_witness
        w = find_witness(*P.coeffs)
        if w is None:
            return Feasibility(FeasibilityStatus.INFEASIBLE,
                               f"exhaustive search over graphs on {P.a1} vertices")
        return Feasibility(FeasibilityStatus.FEASIBLE, "found by exhaustive search", w)
    return res


def _realizable(f: Feasibility) -> Realizable:
    return {
        FeasibilityStatus.FEASIBLE: Realizable.YES,
        FeasibilityStatus.INFEASIBLE: Realizable.NO,
        FeasibilityStatus.UNKNOWN: Realizable.UNKNOWN,
    }[f.status]


# -- report --------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    cubic: Cubic
    taxonomy: Taxonomy
    subcase: str
    verdict: Verdict
    explicit_description: str | None
    attractor_composition: Composition
    realizable: Realizable
    evidence: Evidence | None
    structure: StructureReport

    @property
    def connectedness(self) -> Verdict:
        """Topological verdict; the explicit a1 = 3 set is disconnected but not totally."""
        if self.verdict is Verdict.EXPLICIT_SET:
            return Verdict.DISCONNECTED_NOT_TOTALLY
        return self.verdict

    def to_dict(self) -> dict:
        s = self.structure

        def cx(z):
            return {"re": float(z.real), "im": float(z.imag)}

        return {
            "coefficients": list(self.cubic.coeffs),
            "taxonomy": self.taxonomy.value,
            "subcase": self.subcase,
            "verdict": self.verdict.value,
            "explicit_description": self.explicit_description,
            "attractor_composition": self.attractor_composition.value,
            "realizable": self.realizable.value,
            "evidence": self.evidence.value if self.evidence is not None else None,
            "structure": {
                "c1": cx(s.c1),
                "c2": cx(s.c2),
                "delta1": cx(s.delta1),
                "delta2": cx(s.delta2),
                "multipliers": [cx(m) for m in s.fixed_multipliers],
                "critical_disk": {"center": cx(s.critical_disk.center),
                                  "radius": s.critical_disk.radius},
            },
        }


def classify(P: Cubic, max_iter: int = DEFAULT_MAX_ITER, with_evidence: bool = True,
             search: bool = False) -> ClassificationReport:
    """Classify the attractor of any graph whose reduced polynomial is ``P``.

    Triples no graph realises are still classified as polynomials, with
    ``realizable = NO``.  ``search`` enables exhaustive witness search when
    deciding realizability (slow for ``a1 = 7``).
    """
    a1, a2, a3 = P.coeffs
    if a1 < 3 or a2 < 3 or a3 < 1:
        raise ValueError(f"({a1}, {a2}, {a3}) is below the minimum a1 >= 3, a2 >= 3, a3 >= 1")
    tax, sub, verdict = decide(P)
    feas = feasibility(P, search=search)
    if sub == "U-a1=4-formal":
        feas = Feasibility(FeasibilityStatus.INFEASIBLE, "no unicritical profile has a1 = 4")
    return ClassificationReport(
        cubic=P,
        taxonomy=tax,
        subcase=sub,
        verdict=verdict,
        explicit_description=UNICRITICAL_EXPLICIT if verdict is Verdict.EXPLICIT_SET else None,
        attractor_composition=attractor_composition(P),
        realizable=_realizable(feas),
        evidence=critical_orbit_evidence(P, max_iter) if with_evidence else None,
        structure=structure_report(P),
    )


# -- the list of triples with two real fixed points and non-real zeros ----------

TWO_FIXED_SUBCASES = ("(1)(a)", "(1)(b)", "(1)(c)", "(1)(d)", "(1)(e)")


def two_fixed_point_subcase(P: Cubic) -> str | None:
    """Which of the five threshold sub-cases ``P`` falls in, if any.

    Sub-cases (a)-(d) are bounded above by their own thresholds only; for
    ``a1 = 4`` the parabolic threshold coincides with ``4 a1 a3``, so the
    boundary triple ``(4, 4, 1)`` lands in (d).  Sub-case (e) stays strictly
    below ``4 a1 a3``.
    """
    if P.fixed_disc <= 0 or P.a1 < 4:
        return None
    first = _sign(P.superattracting_disc)
    second = _sign(P.parabolic_disc)
    if first < 0:
        return "(1)(a)" if P.zero_disc < 0 else None
    if first == 0:
        return "(1)(b)"
    if second < 0:
        return "(1)(c)"
    if second == 0:
        return "(1)(d)"
    return "(1)(e)" if P.zero_disc < 0 else None


def two_fixed_point_catalog(a1_min: int = 4, a1_max: int = 8) -> dict[str, list[tuple[int, int, int]]]:
    """Scan all triples not excluded by the feasibility rules and bucket them by sub-case."""
    out: dict[str, list[tuple[int, int, int]]] = {k: [] for k in TWO_FIXED_SUBCASES}
    for a1 in range(a1_min, a1_max + 1):
        for a2 in range(3, comb(a1, 2) + 1):
            for a3 in range(1, comb(a1, 3) + 1):
                P = Cubic(a1, a2, a3)
                sub = two_fixed_point_subcase(P)
                if sub is None:
                    continue
                if feasibility_rules(P).status is FeasibilityStatus.INFEASIBLE:
                    continue
                out[sub].append((a1, a2, a3))
    return out
