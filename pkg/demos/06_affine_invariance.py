"""Affine invariance of extended codes via the digit-order closure test."""

from grmcodes import codes as cc
from grmcodes.analysis.affine import affine_group_preserves, is_affine_invariant

e = cc.extend(cc.grm(3, 3, 2))
print("extended grm(3,3,2) closed:", is_affine_invariant(e.defining_set, 3, 3).invariant)

# over GF(4) the test runs on binary digits of length 2m
e4 = cc.extend(cc.grm(4, 3, 1))
print("extended grm(4,3,1) closed:", is_affine_invariant(e4.defining_set, 2, 6).invariant)

# a set that is not closed, with the witness pair
bad = cc.extend(cc.from_defining_set(3, 8, [2, 6]))
res = is_affine_invariant(bad.defining_set, 3, 2)
print("{0,2,6} closed:", res.invariant, "witness (r, s):", res.witness)

# the direct check over AGL(1, 9) agrees
print("AGL preserves grm ext:", affine_group_preserves(cc.extend(cc.grm(3, 2, 1))))
print("AGL preserves bad ext:", affine_group_preserves(bad))
