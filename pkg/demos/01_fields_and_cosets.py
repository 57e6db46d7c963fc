"""Finite fields, cyclotomic cosets and the factorisation of x^n - 1."""

from grmcodes.cyclotomic import all_cosets, digit_hamming_weight, gamma, q_weight
from grmcodes.field import field_create
from grmcodes.polynomial import factor_xn_minus_1

# GF(27) with its default modulus; x generates the multiplicative group
f = field_create(3, 3)
print("GF(27) modulus (ascending):", f.modulus)
print("alpha^0..alpha^5 encoded:", f.exp[:6].tolist())
print("alpha^5 * alpha^21 =", f.mul(int(f.exp[5]), int(f.exp[21])), "(alpha has order 26)")

# 3-cyclotomic cosets modulo 26: the digit functions are constant on each one
cs = all_cosets(26, 3)
for c in cs.cosets:
    a = c[0]
    print(f"C_{a:<2} {list(c)!s:<14} wt={digit_hamming_weight(a, 3, 3)} "
          f"q-weight={q_weight(a, 3, 3)} gamma={gamma(a, 3, 3)}")

# one irreducible factor per coset
for s, m_s in factor_xn_minus_1(26, 3).items():
    print(f"m_{s}(x) = {m_s.to_list()}")
