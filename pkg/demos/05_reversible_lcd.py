"""Reversible codes built from grm generators, and the LCD property."""

from grmcodes import codes as cc
from grmcodes.analysis.bounds import bch_bound
from grmcodes.analysis.distance import min_distance
from grmcodes.analysis.formulas import reversible_dimension, reversible_distance_lower

for q, m, h in [(2, 4, 1), (2, 6, 2), (3, 4, 1), (5, 2, 1), (4, 3, 2)]:
    c = cc.reversible_grm(q, m, h)
    d = min_distance(c)
    print(f"reversible({q},{m},{h}): [{c.n}, {c.k}, {d.value}]  "
          f"k formula {reversible_dimension(q, m, h)}  d >= {reversible_distance_lower(q, m, h)} "
          f"(BCH {bch_bound(c.defining_set.members, c.n)})  "
          f"reversible={cc.is_reversible(c)} lcd={cc.is_lcd(c)}")

# q = 2 with h = m/2 leaves nothing
print("reversible(2,4,2) dimension:", cc.reversible_grm(2, 4, 2, allow_zero=True).k)
