"""
Classifying cubic independence polynomials
==========================================

Walk through a handful of graphs with independence number 3, read off their
polynomials and ask whether the attractor is connected.
"""

from indy3 import Cubic, classify, independence_profile, make_family, parse_graph

# the 6-cycle: 6 vertices, 9 non-edges, and the two alternating triples
g = parse_graph("""
6
0 1
1 2
2 3
3 4
4 5
5 0
""")
print("C6 profile:", independence_profile(g).coeffs)

# the 4-vertex path gives 1 + 4z + 3z^2
print("P4 profile:", independence_profile(parse_graph("4\n0 1\n1 2\n2 3\n")).coeffs)

# the verdict only depends on (a1, a2, a3)
for triple in [(3, 3, 1), (4, 3, 1), (5, 8, 4), (7, 9, 3), (9, 13, 5), (9, 18, 9), (10, 20, 10)]:
    r = classify(Cubic(*triple, formal=True))
    print(f"{str(triple):>12}  {r.taxonomy.value:<22} {r.verdict.value:<30} evidence={r.evidence.value}")

# (9,13,5) is not settled by the discriminant tests, but both critical orbits escape
r = classify(Cubic(9, 13, 5))
print("c1 =", r.structure.c1, " c2 =", r.structure.c2)

# the first G1 graphs: fixed points drift up the line Re z = -3/2
for n in range(5, 9):
    prof = independence_profile(make_family("G1", n))
    s = classify(Cubic(*prof.coeffs)).structure
    print(f"G1({n}) {prof.coeffs}  fixed point {s.delta2:.6f}")
