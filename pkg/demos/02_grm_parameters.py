"""Parameters of generalised Reed-Muller codes and how distances are certified."""

from grmcodes import codes as cc
from grmcodes.analysis.bounds import bch_bound
from grmcodes.analysis.distance import min_distance
from grmcodes.analysis.formulas import grm_dimension, grm_distance_bounds

for q, m, h in [(3, 3, 1), (3, 4, 1), (3, 4, 2), (3, 4, 3), (4, 3, 1)]:
    code = cc.grm(q, m, h)
    d = min_distance(code)
    lo, hi = grm_distance_bounds(q, m, h)
    print(f"grm({q},{m},{h}): [{code.n}, {code.k}, {d.value}]  "
          f"closed-form k={grm_dimension(q, m, h)}  {lo} <= d <= {hi}  "
          f"BCH={bch_bound(code.defining_set.members, code.n)}  via {d.method}")

# the BCH code with the same designed distance contains the grm code
code = cc.grm(3, 3, 1)
print("inside BCH(3,26,4):", cc.is_subcode(code, cc.bch(3, 26, 4)))

# a tiny budget gives an honest lower bound instead of a guess
print(min_distance(cc.grm(3, 4, 2), budget=50))
