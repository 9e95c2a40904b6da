"""
Backward orbits of -1
=====================

Roots of I_{G^m} are the level-m preimages of -1.  Watch them settle down as m grows,
and compare against a Julia set sample from inverse iteration.
"""

import numpy as np

from indy3 import (Cubic, approximate_attractor, diameter, hausdorff_distance, julia_inverse_sample,
                   roots_of_level)

P = Cubic(4, 3, 1)

levels = [roots_of_level(P, m) for m in range(1, 11)]
for m, (a, b) in enumerate(zip(levels, levels[1:]), start=1):
    print(f"d(S_{m}, S_{m + 1}) = {hausdorff_distance(a, b):.5f}   |S_{m + 1}| = {len(b)} distinct")

# all roots really are roots: run them forward again
worst = max(ps.residuals.max() for ps in levels)
print("worst forward residual:", worst)

J = julia_inverse_sample(P, 20000, seed=1)
print("d(S_10, Julia sample) =", hausdorff_distance(levels[-1], J))

# random sampling reaches much deeper levels cheaply
deep = approximate_attractor(P, depth=40, sample=5000, seed=7)
print("depth-40 sample:", len(deep), "points, diameter", diameter(deep))

# (5,7,3) has a double root at -1, so the attractor keeps the finite root sets too
ps = approximate_attractor(Cubic(5, 7, 3), depth=6)
print("(5,7,3) root union merged:", ps.meta.get("root_union", False),
      " real points:", int(np.sum(np.abs(ps.points.imag) < 1e-12)))
