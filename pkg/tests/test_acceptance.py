"""Acceptance checks, one ``criterion`` marker per item.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section at the end of the output: one PASS/FAIL line per criterion.

Tolerances: every comparison here is exact integer or set equality.  There
are no floating-point quantities in this package.
"""

from __future__ import annotations

import sys
import time
from math import ceil, comb

import numpy as np
import pytest

from grmcodes import codes as cc
from grmcodes.analysis.affine import affine_group_preserves, is_affine_invariant
from grmcodes.analysis.bounds import bch_bound, check_ht_witness, hartmann_tzeng_search
from grmcodes.analysis.distance import min_distance
from grmcodes.analysis.enumeration import weight_histogram
from grmcodes.analysis.formulas import (
    grm_dimension,
    grm_distance_bounds,
    grm_dual_dimension,
    grm_dual_distance_lower,
    reversible_dimension,
    reversible_distance_lower,
)
from grmcodes.analysis.linalg import null_space, same_row_space
from grmcodes.analysis.macwilliams import macwilliams_transform
from grmcodes.analysis.report import (
    EXTENDED_332_DESIGNS,
    EXTENDED_332_WEIGHTS,
    PARAMETER_TABLE,
    analyze,
    dumps,
)
from grmcodes.cyclotomic import (
    all_cosets,
    gamma_array,
    index_set,
    negate,
    q_weight_array,
    weight_array,
    weight_level,
)
from grmcodes.field import prime_power
from grmcodes.polynomial import Polynomial, factor_xn_minus_1, product

SWEEP = [(q, m) for q in (2, 3, 4, 5) for m in range(2, 14) if q**m <= 6561]
SWEEP_H = [(q, m, h) for q, m in SWEEP for h in range(1, m)]
SWEEP_REV = [(q, m, h) for q, m in SWEEP for h in range(1, ceil(m / 2) + 1)]
PRIME_SWEEP_H = [(q, m, h) for q, m, h in SWEEP_H if prime_power(q)[1] == 1]

# enumeration budget for the sweep-wide distance checks
SWEEP_BUDGET = 2**18


def _ids(params):
    return ["-".join(map(str, p)) for p in params]


# 1. parameter table


@pytest.mark.criterion(1)
@pytest.mark.parametrize("label,make,expected", PARAMETER_TABLE, ids=[p[0] for p in PARAMETER_TABLE])
def test_parameter_table(label, make, expected):
    code = make()
    d = min_distance(code)
    assert d.status == "exact"
    assert (code.length, code.k, d.value) == expected


@pytest.mark.criterion(1)
def test_parameter_table_runtime():
    t0 = time.perf_counter()
    for _, make, _ in PARAMETER_TABLE:
        min_distance(make())
    assert time.perf_counter() - t0 < 600


@pytest.mark.criterion(1)
@pytest.mark.parametrize("label", ["grm(3,4,1)", "grm(3,4,2)"])
def test_large_dimension_uses_information_sets(label):
    make = dict((p[0], p[1]) for p in PARAMETER_TABLE)[label]
    d = min_distance(make())
    assert d.method == "information_set" and d.status == "exact"


# 2. weight enumerator


@pytest.mark.criterion(2)
def test_extended_332_weight_enumerator():
    e = cc.extend(cc.grm(3, 3, 2))
    t0 = time.perf_counter()
    A = weight_histogram(e.generator_matrix(), e.field)
    elapsed = time.perf_counter() - t0
    got = {i: int(a) for i, a in enumerate(A) if a}
    assert got == EXTENDED_332_WEIGHTS
    assert sum(got.values()) == 3**8
    assert elapsed < 1.0


# 3. designs


@pytest.mark.criterion(3)
@pytest.mark.parametrize("k,lam", EXTENDED_332_DESIGNS, ids=[f"k{k}" for k, _ in EXTENDED_332_DESIGNS])
def test_extended_332_designs(k, lam):
    from grmcodes.analysis.designs import extract_design

    cert = extract_design(cc.extend(cc.grm(3, 3, 2)), k)
    assert cert.uniform
    assert cert.v == 27 and cert.k == k and cert.lam == lam
    assert cert.pair_coverage_histogram == {lam: comb(27, 2)}
    assert lam * comb(27, 2) == cert.b * comb(k, 2)


# 4. closed-form dimensions


@pytest.mark.criterion(4)
@pytest.mark.parametrize("q,m,h", SWEEP_H, ids=_ids(SWEEP_H))
def test_grm_and_dual_dimensions(q, m, h):
    code = cc.grm(q, m, h)
    assert code.k == code.n - code.generator.degree == grm_dimension(q, m, h)
    d = cc.dual(code)
    assert d.k == d.n - d.generator.degree == grm_dual_dimension(q, m, h)


@pytest.mark.criterion(4)
@pytest.mark.parametrize("q,m,h", SWEEP_REV, ids=_ids(SWEEP_REV))
def test_reversible_dimensions(q, m, h):
    code = cc.reversible_grm(q, m, h, allow_zero=True)
    assert code.k == code.n - code.generator.degree == reversible_dimension(q, m, h)


# 5. identities and counting


@pytest.mark.criterion(5)
@pytest.mark.parametrize("q,m", SWEEP, ids=_ids(SWEEP))
def test_wt_of_negation_identity(q, m):
    n = q**m - 1
    wt, gam = weight_array(q, m), gamma_array(q, m)
    a = np.arange(n)
    lhs = wt[n - a]
    assert np.array_equal(lhs, m - wt[a] + gam[a])
    from grmcodes.cyclotomic import digit_array

    top = (digit_array(q, m)[a] == q - 1).sum(axis=1)
    assert np.array_equal(lhs, m - top)


@pytest.mark.criterion(5)
@pytest.mark.parametrize("q,m", SWEEP, ids=_ids(SWEEP))
def test_negated_weight_level_counts(q, m):
    n = q**m - 1
    wt = weight_array(q, m)
    for i in range(0, m + 1):
        level = np.array(weight_level(q, m, i).members, dtype=np.int64)
        w = wt[n - level]
        for j in range(0, i + 1):
            expected = comb(m, i) * comb(i, j) * (q - 2) ** j
            if i == m and j == 0:
                # the all-(q-1) word is n itself, outside 0..n-1
                expected -= 1
            assert int(np.count_nonzero(w == m - i + j)) == expected, (i, j)


@pytest.mark.criterion(5)
@pytest.mark.parametrize("q,m", SWEEP, ids=_ids(SWEEP))
def test_index_set_disjoint_from_negation(q, m):
    for t in range(1, ceil(m / 2)):
        I = index_set(q, m, t)
        assert len(I & negate(I)) == 0
    if m % 2 == 0:
        # at t = m/2 the intersection is nonempty, so the bound on t is sharp
        I = index_set(q, m, m // 2)
        assert len(I & negate(I)) > 0


@pytest.mark.criterion(5)
@pytest.mark.parametrize("q,m", SWEEP, ids=_ids(SWEEP))
def test_digit_functions_constant_on_cosets(q, m):
    n = q**m - 1
    cs = all_cosets(n, q)
    assert sum(len(c) for c in cs.cosets) == n
    for arr in (weight_array(q, m), q_weight_array(q, m), gamma_array(q, m)):
        for c in cs.cosets:
            vals = arr[list(c)]
            assert (vals == vals[0]).all()


@pytest.mark.criterion(5)
@pytest.mark.parametrize("q,m", SWEEP, ids=_ids(SWEEP))
def test_factorization_product(q, m):
    n = q**m - 1
    factors = factor_xn_minus_1(n, q)
    f = next(iter(factors.values())).field
    assert product(factors.values(), f) == Polynomial.x_n_minus_1(f, n)
    assert sorted(factors) == list(all_cosets(n, q).leaders)


# 6. distance bounds


def _small(params, limit=256):
    return [p for p in params if p[0] ** p[1] <= limit]


@pytest.mark.criterion(6)
@pytest.mark.parametrize("q,m,h", _small(SWEEP_H), ids=_ids(_small(SWEEP_H)))
def test_grm_distance_sandwich(q, m, h):
    lo, hi = grm_distance_bounds(q, m, h)
    assert lo == (q ** (h + 1) - 1) // (q - 1) and hi == 2 * q**h - 1
    d = min_distance(cc.grm(q, m, h), SWEEP_BUDGET)
    if d.status == "exact":
        assert lo <= d.value <= hi
    else:
        assert d.value >= lo


@pytest.mark.criterion(6)
@pytest.mark.parametrize("q,m,h", _small(SWEEP_H), ids=_ids(_small(SWEEP_H)))
def test_dual_distance_lower_bound(q, m, h):
    d = min_distance(cc.dual(cc.grm(q, m, h)), SWEEP_BUDGET)
    if d.status == "exact":
        assert d.value >= grm_dual_distance_lower(q, m, h)


@pytest.mark.criterion(6)
@pytest.mark.parametrize("q,m,h", SWEEP_H, ids=_ids(SWEEP_H))
def test_ht_search_reaches_dual_bound(q, m, h):
    code = cc.dual(cc.grm(q, m, h))
    w = hartmann_tzeng_search(code.defining_set.members, code.n)
    assert w.bound >= grm_dual_distance_lower(q, m, h)
    assert check_ht_witness(code.defining_set.members, code.n, w)


@pytest.mark.criterion(6)
@pytest.mark.parametrize("q,m,h", SWEEP_REV, ids=_ids(SWEEP_REV))
def test_reversible_distance_lower_bound(q, m, h):
    code = cc.reversible_grm(q, m, h, allow_zero=True)
    if code.k == 0:
        pytest.skip("zero code")
    bound = reversible_distance_lower(q, m, h)
    assert bch_bound(code.defining_set.members, code.n) >= bound
    if q**m <= 256:
        d = min_distance(code, SWEEP_BUDGET)
        assert d.value >= bound


@pytest.mark.criterion(6)
def test_sweep_has_exact_distances():
    exact = sum(
        min_distance(cc.grm(q, m, h), SWEEP_BUDGET).status == "exact" for q, m, h in _small(SWEEP_H)
    )
    # the bound checks above are not vacuous
    assert exact >= 30


# 7. subcode relations


@pytest.mark.criterion(7)
@pytest.mark.parametrize("q,m,h", SWEEP_H, ids=_ids(SWEEP_H))
def test_bch_cover(q, m, h):
    code = cc.grm(q, m, h)
    assert cc.is_subcode(code, cc.bch(q, code.n, (q ** (h + 1) - 1) // (q - 1), 1))


@pytest.mark.criterion(7)
@pytest.mark.parametrize("q,m,h", SWEEP_H, ids=_ids(SWEEP_H))
def test_pgrm_inside_grm(q, m, h):
    ell = (m - h) * (q - 1) - 1
    assert cc.is_subcode(cc.pgrm(q, m, ell), cc.grm(q, m, h))


SWEEP_DUAL_SUB = [p for p in SWEEP_H if p[2] <= p[1] - 2]


@pytest.mark.criterion(7)
@pytest.mark.parametrize("q,m,h", SWEEP_DUAL_SUB, ids=_ids(SWEEP_DUAL_SUB))
def test_dual_proper_subcode(q, m, h):
    d = cc.dual(cc.grm(q, m, h))
    big = cc.grm(q, m, m - 1 - h)
    assert cc.is_subcode(d, big)
    assert d.k < big.k
    if q == 2:
        assert d.defining_set.as_set() == big.defining_set.as_set() | {0}
        assert big.k - d.k == 1


# 8. affine invariance


@pytest.mark.criterion(8)
@pytest.mark.parametrize("q,m,h", PRIME_SWEEP_H, ids=_ids(PRIME_SWEEP_H))
def test_extended_grm_affine_invariant(q, m, h):
    e = cc.extend(cc.grm(q, m, h))
    res = is_affine_invariant(e.defining_set, q, m)
    assert res.invariant and res.witness is None


@pytest.mark.criterion(8)
@pytest.mark.parametrize("q,m,h", [(2, 3, 1), (3, 2, 1), (2, 4, 2), (3, 3, 1)])
def test_affine_group_oracle_agrees(q, m, h):
    e = cc.extend(cc.grm(q, m, h))
    assert affine_group_preserves(e)


@pytest.mark.criterion(8)
def test_counterexample_witness():
    # {0} u C_2 for q=3, n=8: 2 is in the set but 1 (digitwise below 2) is not
    T = {0, 2, 6}
    res = is_affine_invariant(T, 3, 2)
    assert not res.invariant
    r, s = res.witness
    assert s in T and r not in T
    assert r < s and all(int(a) <= int(b) for a, b in zip(np.base_repr(r, 3).zfill(2), np.base_repr(s, 3).zfill(2)))
    code = cc.from_defining_set(3, 8, [2, 6])
    assert not affine_group_preserves(cc.extend(code))


# 9. oracle equivalence


def _oracle_instances():
    out = []
    for q, m, h in SWEEP_H:
        n = q**m - 1
        k = grm_dimension(q, m, h)
        if max(q**k, q ** (n - k)) <= SWEEP_BUDGET:
            out.append(("grm", q, m, h))
    for q, m, h in SWEEP_REV:
        n = q**m - 1
        k = reversible_dimension(q, m, h)
        if k > 0 and max(q**k, q ** (n - k)) <= SWEEP_BUDGET:
            out.append(("reversible", q, m, h))
    return out


ORACLE = _oracle_instances()


@pytest.mark.criterion(9)
@pytest.mark.parametrize("family,q,m,h", ORACLE, ids=_ids(ORACLE))
def test_macwilliams_matches_enumeration(family, q, m, h):
    code = cc.grm(q, m, h) if family == "grm" else cc.reversible_grm(q, m, h)
    A = weight_histogram(code.generator_matrix(), code.field, SWEEP_BUDGET)
    d = cc.dual(code)
    B = weight_histogram(d.generator_matrix(), d.field, SWEEP_BUDGET)
    assert macwilliams_transform(A, q) == [int(b) for b in B]
    # the code generated by the check polynomial is equivalent to the dual
    C = weight_histogram(cc.complement(code).generator_matrix(), code.field, SWEEP_BUDGET)
    assert np.array_equal(B, C)


@pytest.mark.criterion(9)
def test_macwilliams_instances_nonempty():
    assert len(ORACLE) >= 10


KERNEL = [p for p in SWEEP_H if p[0] ** p[1] <= 65]


@pytest.mark.criterion(9)
@pytest.mark.parametrize("q,m,h", KERNEL, ids=_ids(KERNEL))
def test_dual_by_set_equals_kernel(q, m, h):
    for code in (cc.grm(q, m, h), cc.bch(q, q**m - 1, 3)):
        d = cc.dual(code)
        K = null_space(code.generator_matrix(), code.field)
        assert same_row_space(d.generator_matrix(), K, code.field)


# 10. determinism


DET = [
    (lambda: cc.extend(cc.grm(3, 3, 2)), {"weights": True, "designs": True}),
    (lambda: cc.grm(3, 4, 1), {}),
    (lambda: cc.dual(cc.grm(3, 3, 2)), {}),
    (lambda: cc.dual(cc.grm(2, 5, 2)), {"weights": True, "designs": True}),
    (lambda: cc.reversible_grm(2, 6, 2), {}),
]


@pytest.mark.criterion(10)
@pytest.mark.parametrize("idx", range(len(DET)))
def test_reports_byte_identical(idx):
    make, kw = DET[idx]
    runs = [dumps(analyze(make(), threads=t, **kw)) for t in (1, 1, 4, 3)]
    assert len(set(runs)) == 1


@pytest.mark.criterion(10)
def test_cli_json_byte_identical(capsys):
    from grmcodes.cli import main

    outs = []
    for threads in ("1", "4"):
        for _ in range(2):
            assert main(["analyze", "--family", "grm", "--q", "3", "--m", "3", "--h", "2", "--extend",
                         "--weights", "--format", "json", "--threads", threads]) == 0
            outs.append(capsys.readouterr().out)
    assert len(set(outs)) == 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
