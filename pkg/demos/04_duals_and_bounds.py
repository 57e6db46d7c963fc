"""Dual codes: Hartmann-Tzeng bounds and the MacWilliams identity."""

from grmcodes import codes as cc
from grmcodes.analysis.bounds import hartmann_tzeng_search
from grmcodes.analysis.distance import min_distance
from grmcodes.analysis.enumeration import weight_histogram
from grmcodes.analysis.formulas import grm_dual_distance_lower
from grmcodes.analysis.macwilliams import macwilliams_transform

for q, m, h in [(2, 4, 2), (3, 3, 1), (3, 3, 2)]:
    d = cc.dual(cc.grm(q, m, h))
    w = hartmann_tzeng_search(d.defining_set.members, d.n)
    print(f"dual grm({q},{m},{h}): [{d.n}, {d.k}, {min_distance(d).value}]  "
          f"HT {w.bound} (run at {w.start}, length {w.delta - 1}, step {w.b}, s={w.s})  "
          f"formula {grm_dual_distance_lower(q, m, h)}")

# the transform of a code's distribution is its dual's distribution
c = cc.grm(2, 4, 2)
A = weight_histogram(c.generator_matrix(), c.field)
B = weight_histogram(cc.dual(c).generator_matrix(), c.field)
print("A    :", A.tolist())
print("MW(A):", macwilliams_transform(A, 2))
print("B    :", B.tolist())

# dual grm(q,m,h) sits properly inside grm(q,m,m-1-h)
print(cc.is_subcode(cc.dual(cc.grm(3, 4, 1)), cc.grm(3, 4, 2)))
