import json
import random
from math import comb

import pytest

from indy3.classify import (BuffScreen, Composition, FeasibilityStatus, Realizable, Taxonomy,
                            attractor_composition, buff_screen, classify, decide, feasibility,
                            feasibility_rules, two_fixed_point_catalog, two_fixed_point_subcase)
from indy3.cubic import Cubic, Evidence, evaluate, structure_report
from indy3.enumerate import enumerate_realizable_triples
from indy3.graphs import independence_profile

from golden import CON, DNT, GOLDEN, REFERENCE_LISTS, TD, oracle_verdict


@pytest.mark.parametrize("triple,verdict", GOLDEN)
def test_golden_verdicts(triple, verdict):
    assert oracle_verdict(*triple) is verdict  # the oracle agrees with the hand list
    assert classify(Cubic(*triple, formal=True), with_evidence=False).verdict is verdict


def test_golden_list_covers_every_subcase():
    subs = {decide(Cubic(*t, formal=True))[1] for t, _ in GOLDEN}
    assert subs == {
        "BNR", "U-a1=3", "U-a1=4-formal", "U-a1>4", "BR-nonreal-fp", "BR-1fp",
        "BR-2fp-caseII", "BR-2fp-caseIII", "BR-2fp-caseI-(1)(a)", "BR-2fp-caseI-(1)(b)",
        "BR-2fp-caseI-(1)(c)", "BR-2fp-caseI-(1)(d)", "BR-2fp-caseI-(1)(e)",
    }


def all_triples(a1_max):
    for a1 in range(3, a1_max + 1):
        for a2 in range(3, comb(a1, 2) + 1):
            for a3 in range(1, comb(a1, 3) + 1):
                yield a1, a2, a3


TAXONOMY_BY_SIGN = {-1: Taxonomy.BICRITICALLY_NON_REAL, 0: Taxonomy.UNICRITICAL,
                    1: Taxonomy.BICRITICALLY_REAL}


def test_decision_tree_matches_oracle_exhaustively():
    n = 0
    for t in all_triples(14):
        tax, sub, verdict = decide(Cubic(*t))
        assert verdict is oracle_verdict(*t), t
        sign = (t[1] ** 2 > 3 * t[0] * t[2]) - (t[1] ** 2 < 3 * t[0] * t[2])
        assert tax is TAXONOMY_BY_SIGN[sign]
        n += 1
    assert n > 10000


def test_explicit_set_report():
    r = classify(Cubic(3, 3, 1))
    assert r.explicit_description == "{-1} U {z : |z+1| = 1}"
    assert r.connectedness is DNT
    assert r.taxonomy is Taxonomy.UNICRITICAL


def test_unicritical_four_is_formal():
    r = classify(Cubic(4, 6, 3))
    assert r.verdict is TD and r.realizable is Realizable.NO


def test_report_json_schema():
    d = classify(Cubic(9, 13, 5)).to_dict()
    json.dumps(d)
    for key in ("taxonomy", "subcase", "verdict", "explicit_description", "attractor_composition",
                "realizable", "evidence", "structure"):
        assert key in d
    assert set(d["structure"]) == {"c1", "c2", "delta1", "delta2", "multipliers", "critical_disk"}
    assert d["verdict"] == "DisconnectedTotalityUnresolved"
    assert d["evidence"] == "BothEscape"
    assert d["subcase"] == "BR-2fp-caseI-(1)(e)"


# -- composition and screen -----------------------------------------------------------

def test_attractor_composition_examples():
    for t in [(5, 7, 3), (9, 15, 7), (3, 3, 1), (4, 5, 2)]:
        assert attractor_composition(Cubic(*t)) is Composition.JULIA_PLUS_ROOT_UNION
    assert attractor_composition(Cubic(12, 42, 40)) is Composition.JULIA_ONLY


def test_attractor_composition_iff_minus_one_is_multiple_root():
    # -1 is a multiple root of I exactly when P(-1) = -1 and P'(-1) = 0
    for t in all_triples(10):
        P = Cubic(*t)
        double = evaluate(P, -1) == -1 and P.derivative(-1) == 0
        assert (attractor_composition(P) is Composition.JULIA_PLUS_ROOT_UNION) == double, t


def test_buff_screen():
    assert buff_screen(Cubic(10, 20, 10)) is BuffScreen.FORCES_DISCONNECTED
    assert buff_screen(Cubic(9, 18, 9)) is BuffScreen.NO_INFORMATION
    assert buff_screen(Cubic(4, 3, 1)) is BuffScreen.NO_INFORMATION
    # a connected verdict never has a1 > 9
    for t in all_triples(12):
        if decide(Cubic(*t))[2] is CON:
            assert t[0] <= 9


# -- feasibility -------------------------------------------------------------------------

def test_feasibility_examples():
    assert feasibility(Cubic(4, 5, 1)).status is FeasibilityStatus.INFEASIBLE
    f = feasibility(Cubic(5, 8, 4))
    assert f.status is FeasibilityStatus.FEASIBLE
    assert independence_profile(f.witness).coeffs == (5, 8, 4)
    assert feasibility(Cubic(8, 26, 24)).status is FeasibilityStatus.INFEASIBLE
    assert feasibility(Cubic(40, 3, 1)).status is FeasibilityStatus.FEASIBLE  # G1(40)


def test_feasibility_rules_never_exclude_a_realised_triple():
    for n in range(3, 8):
        for a2, a3 in enumerate_realizable_triples(n).triples:
            assert feasibility_rules(Cubic(n, a2, a3)).status is not FeasibilityStatus.INFEASIBLE


def test_feasibility_search_is_exact_for_small_a1():
    for n in (4, 5, 6):
        real = enumerate_realizable_triples(n).triples
        for a2 in range(3, comb(n, 2) + 1):
            for a3 in range(1, comb(n, 3) + 1):
                f = feasibility(Cubic(n, a2, a3))
                assert (f.status is FeasibilityStatus.FEASIBLE) == ((a2, a3) in real)


# -- the two-fixed-point catalogue ------------------------------------------------------

def test_two_fixed_point_catalog_matches_reference_lists():
    cat = two_fixed_point_catalog(4, 8)
    assert {k: sorted(v) for k, v in cat.items()} == {k: sorted(v) for k, v in REFERENCE_LISTS.items()}
    assert sum(len(v) for v in cat.values()) == 23


def test_catalog_critical_value_direction():
    # connected exactly when P(c2) >= delta1 (with equality at the boundary rows)
    for sub, triples in REFERENCE_LISTS.items():
        for t in triples:
            P = Cubic(*t)
            s = structure_report(P)
            gap = s.critical_values[1].real - s.delta1.real
            verdict = decide(P)[2]
            if abs(gap) < 1e-9:
                assert verdict in (CON, DNT)
            elif gap > 0:
                assert verdict is CON or sub == "(1)(b)", t
            else:
                assert verdict is not CON, t


def test_multiplier_subcases():
    for sub, triples in REFERENCE_LISTS.items():
        for t in triples:
            P = Cubic(*t)
            if two_fixed_point_subcase(P) != sub or t == (4, 4, 1):
                continue
            s = structure_report(P)
            d2 = s.delta2.real
            m = P.derivative(d2)
            if sub == "(1)(a)":
                assert abs(m) < 1 and d2 < s.c1.real
            elif sub == "(1)(b)":
                assert abs(m) < 1e-9 and abs(d2 - s.c1.real) < 1e-9
            elif sub == "(1)(d)":
                assert abs(m + 1) < 1e-9
            elif sub == "(1)(e)":
                assert abs(m) > 1


# -- evidence consistency -------------------------------------------------------------

def sampled_triples(seed=7, per_class=50):
    rng = random.Random(seed)
    buckets = {Taxonomy.BICRITICALLY_NON_REAL: [], Taxonomy.UNICRITICAL: [], Taxonomy.BICRITICALLY_REAL: []}
    pool = [t for t in all_triples(16)
            if feasibility_rules(Cubic(*t)).status is not FeasibilityStatus.INFEASIBLE]
    rng.shuffle(pool)
    for t in pool:
        tax = decide(Cubic(*t))[0]
        if len(buckets[tax]) < per_class:
            buckets[tax].append(t)
    return [t for v in buckets.values() for t in v]


def test_verdicts_consistent_with_numerical_evidence():
    triples = sampled_triples() + [t for v in REFERENCE_LISTS.values() for t in v]
    for t in triples:
        P = Cubic(*t)
        r = classify(P, max_iter=1000)
        if r.verdict is CON:
            assert r.evidence is not Evidence.BOTH_ESCAPE, t
        if r.verdict is TD:
            if P.zero_disc == 0:
                # c1 is a zero of P, so its orbit lands on the fixed point 0
                assert r.evidence is Evidence.MIXED, t
            else:
                assert r.evidence is Evidence.BOTH_ESCAPE, t
