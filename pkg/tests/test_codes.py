import itertools
import json

import numpy as np
import pytest

from grmcodes import codes as cc
from grmcodes.analysis.designs import extract_design
from grmcodes.analysis.distance import min_distance
from grmcodes.analysis.enumeration import weight_histogram
from grmcodes.analysis.linalg import null_space, rank
from grmcodes.field import is_primitive
from grmcodes.polynomial import Polynomial, is_self_reciprocal, splitting_context


def _codewords(code):
    G, f = code.generator_matrix(), code.field
    for msg in itertools.product(range(f.order), repeat=G.shape[0]):
        w = np.zeros(G.shape[1], dtype=np.int64)
        for c, row in zip(msg, G):
            w = f.add_vec(w, f.scale_vec(c, row))
        yield w


def test_grm_examples():
    assert (cc.grm(3, 3, 1).n, cc.grm(3, 3, 1).k) == (26, 20)
    g = cc.grm(2, 4, 1)
    assert (g.n, g.k) == (15, 11) and g.generator.to_list() == [1, 1, 0, 0, 1]
    assert cc.grm(3, 4, 3).k == 16
    t = cc.grm(3, 3, 3)
    assert t.trivial and t.k == 1


@pytest.mark.parametrize("args", [(3, 1, 1), (3, 3, 0), (3, 3, 4), (6, 2, 1)])
def test_grm_rejects(args):
    with pytest.raises(ValueError):
        cc.grm(*args)


def test_pgrm_examples():
    c = cc.pgrm(2, 4, 1)
    assert (c.n, c.k) == (15, 5)
    assert min_distance(c).value == 7
    assert cc.pgrm(3, 3, 0).k == 1
    from grmcodes.analysis.formulas import pgrm_dimension

    assert cc.pgrm(3, 3, 5).k == pgrm_dimension(3, 3, 5)
    with pytest.raises(ValueError):
        cc.pgrm(3, 3, 6)


def test_bch_examples():
    b = cc.bch(2, 15, 5)
    assert b.defining_set.members == (1, 2, 3, 4, 6, 8, 9, 12) and b.k == 7
    assert cc.bch(2, 15, 2).generator == cc.grm(2, 4, 1).generator
    assert cc.bch(3, 26, 4).defining_set.as_set() >= cc.grm(3, 3, 1).defining_set.as_set()
    with pytest.raises(ValueError):
        cc.bch(2, 15, 1)


@pytest.mark.parametrize("make", [lambda: cc.grm(3, 3, 1), lambda: cc.grm(2, 5, 2), lambda: cc.bch(4, 15, 4)])
def test_dual_involution_and_dimension(make):
    c = make()
    d = cc.dual(c)
    assert d.k == c.n - c.k
    assert cc.dual(d).same_code(c)
    # dual rows are orthogonal to the code
    f = c.field
    G, H = c.generator_matrix(), d.generator_matrix()
    prod = np.zeros((G.shape[0], H.shape[0]), dtype=np.int64)
    for j in range(c.n):
        prod = f.add_vec(prod, f.mul_vec(G[:, j][:, None], H[:, j][None, :]))
    assert not prod.any()


def test_complement():
    c = cc.grm(3, 3, 1)
    h = cc.complement(c)
    assert h.k == c.n - c.k
    assert h.generator * c.generator == Polynomial.x_n_minus_1(c.field, c.n)
    assert min_distance(h).value == 15 == min_distance(cc.dual(c)).value
    zero = cc.from_defining_set(2, 7, range(7))
    assert zero.k == 0 and cc.complement(zero).k == 7


def test_extend():
    e = cc.extend(cc.grm(2, 4, 1))
    assert (e.length, e.k) == (16, 11)
    assert min_distance(e).value == 4
    for w in _codewords(cc.extend(cc.grm(3, 2, 1))):
        assert int(w.sum()) % 3 == 0
    even = cc.from_defining_set(2, 7, [0, 1, 2, 4])
    G = cc.extend(even).generator_matrix()
    assert not G[:, -1].any()
    assert cc.extend(even).defining_set.as_set() == {0, 1, 2, 4, 7}


@pytest.mark.parametrize("q,m,h", [(2, 4, 1), (5, 2, 1), (4, 3, 2), (3, 4, 1), (2, 6, 2), (3, 3, 1)])
def test_reversible(q, m, h):
    c = cc.reversible_grm(q, m, h)
    assert is_self_reciprocal(c.generator)
    assert cc.is_reversible(c) and cc.is_lcd(c)
    G = c.generator_matrix()
    assert rank(np.vstack([G, G[:, ::-1]]), c.field) == c.k


def test_reversible_rejects():
    with pytest.raises(ValueError):
        cc.reversible_grm(2, 4, 2)  # zero code
    assert cc.reversible_grm(2, 4, 2, allow_zero=True).k == 0
    with pytest.raises(ValueError):
        cc.reversible_grm(3, 4, 3)


def test_lcd_by_hull():
    c = cc.reversible_grm(2, 4, 1)
    G = c.generator_matrix()
    H = null_space(G, c.field)
    assert rank(np.vstack([G, H]), c.field) == c.n
    assert not cc.is_lcd(cc.grm(2, 4, 1))


def test_is_subcode():
    assert cc.is_subcode(cc.grm(3, 3, 2), cc.grm(3, 3, 1))
    assert not cc.is_subcode(cc.grm(3, 3, 1), cc.grm(3, 3, 2))
    # different ambient spaces
    assert not cc.is_subcode(cc.grm(2, 4, 1), cc.grm(2, 3, 1))


def test_generator_matrix_rank_and_shape():
    c = cc.grm(4, 2, 1)
    G = cc.generator_matrix(c)
    assert G.shape == (c.k, c.n) and rank(G, c.field) == c.k


@pytest.mark.parametrize("make", [
    lambda: cc.grm(3, 3, 1),
    lambda: cc.dual(cc.grm(2, 4, 2)),
    lambda: cc.reversible_grm(5, 2, 1),
    lambda: cc.extend(cc.grm(3, 3, 2)),
    lambda: cc.pgrm(2, 4, 1),
])
def test_descriptor_round_trip(make):
    c = make()
    d = json.loads(json.dumps(c.descriptor()))
    back = cc.code_from_descriptor(d)
    assert back.descriptor() == c.descriptor()


def test_descriptor_rejects_tampering():
    d = cc.grm(2, 4, 1).descriptor()
    d["generator"] = [1, 0, 0, 1, 1]
    with pytest.raises(ValueError):
        cc.code_from_descriptor(d)


def _other_primitive(p, k, exclude):
    for low in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(low)) + (1,)
        if coeffs != exclude and coeffs[0] and is_primitive(coeffs, p):
            return coeffs


@pytest.mark.parametrize("q,m,h,weights", [(3, 3, 2, [14, 15]), (2, 4, 1, [4, 6]), (4, 2, 1, [])])
def test_parameters_invariant_under_primitive_element(q, m, h, weights):
    default = splitting_context(q, q**m - 1)
    p, s = default.p, default.s
    alt = _other_primitive(p, s * m, default.ext.modulus)
    ctx = splitting_context(q, q**m - 1, alt)
    a, b = cc.grm(q, m, h), cc.grm(q, m, h, context=ctx)
    assert (a.n, a.k) == (b.n, b.k)
    ea, eb = cc.extend(a), cc.extend(b)
    assert np.array_equal(weight_histogram(ea.generator_matrix(), ea.field),
                          weight_histogram(eb.generator_matrix(), eb.field))
    for w in weights:
        assert extract_design(ea, w).as_dict() == extract_design(eb, w).as_dict()
