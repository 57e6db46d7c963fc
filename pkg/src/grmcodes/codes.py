"""Cyclic codes given by defining sets, and the constructions on top of them.

All codes are primitive-length cyclic codes over GF(q) unless built through
:func:`bch` with a non-primitive ``n``.  A code is fully determined by its
defining set ``T`` (exponents ``a`` with ``g(alpha^a) = 0``); the generator
polynomial is kept alongside for divisibility checks and encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil
from typing import Any

import numpy as np

from .cyclotomic import (
    IndexSet,
    complement_in_N,
    index_set,
    negate,
    q_weight_array,
)
from .field import DEFAULT_MAX_ORDER, prime_power
from .polynomial import (
    Polynomial,
    SplittingContext,
    is_self_reciprocal,
    poly_gcd,
    poly_lcm,
    reciprocal,
    splitting_context,
)

FAMILIES = ("grm", "pgrm", "bch", "reversible", "dual", "complement", "custom")


@dataclass(frozen=True, eq=False)
class CyclicCode:
    q: int
    n: int
    defining_set: IndexSet
    generator: Polynomial = field(repr=False)
    family: str = "custom"
    params: dict = field(default_factory=dict)
    context: SplittingContext = field(default=None, repr=False, compare=False)
    trivial: bool = False

    @property
    def m(self) -> int:
        return self.context.m

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    @property
    def length(self) -> int:
        return self.n

    @property
    def field(self):
        return self.context.base

    def check_polynomial(self) -> Polynomial:
        x_n = Polynomial.x_n_minus_1(self.field, self.n)
        h, r = divmod(x_n, self.generator)
        assert r.is_zero()
        return h.monic()

    def generator_matrix(self) -> np.ndarray:
        return generator_matrix(self)

    def descriptor(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "family": self.family,
            "params": self.params,
            "field": self.context.ext.describe(),
            "defining_set": list(self.defining_set.members),
            "generator": self.generator.to_list(),
            "k": self.k,
        }

    def same_code(self, other: "CyclicCode") -> bool:
        return (
            self.q == other.q
            and self.n == other.n
            and self.defining_set.members == other.defining_set.members
            and self.generator == other.generator
        )

    def __repr__(self):
        return f"CyclicCode({self.family} {self.params}, [{self.n}, {self.k}] over GF({self.q}))"


@dataclass(frozen=True, eq=False)
class ExtendedCode:
    """Cyclic code with an appended coordinate making every codeword sum to zero.

    The extension coordinate is the last one.  ``defining_set`` is the
    extended defining set, a subset of ``0..n`` in which ``n`` marks an
    even-like base code.
    """

    base: CyclicCode
    defining_set: IndexSet

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def length(self) -> int:
        return self.base.n + 1

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def field(self):
        return self.base.field

    @property
    def context(self):
        return self.base.context

    def generator_matrix(self) -> np.ndarray:
        g = generator_matrix(self.base)
        f = self.field
        parity = np.zeros(g.shape[0], dtype=np.int64)
        for j in range(g.shape[1]):
            parity = f.add_vec(parity, g[:, j])
        return np.hstack([g, f.neg_vec(parity)[:, None]])

    def descriptor(self) -> dict[str, Any]:
        d = self.base.descriptor()
        return {
            "q": self.q,
            "m": self.base.m,
            "n": self.n,
            "length": self.length,
            "family": "extended",
            "params": {"base": {"family": d["family"], "params": d["params"]}},
            "field": d["field"],
            "defining_set": list(self.defining_set.members),
            "base_defining_set": d["defining_set"],
            "generator": d["generator"],
            "k": self.k,
        }

    def __repr__(self):
        return f"ExtendedCode([{self.length}, {self.k}] from {self.base!r})"


def _context(q: int, n: int, context: SplittingContext | None, max_order: int) -> SplittingContext:
    if context is not None:
        if (context.q, context.n) != (q, n):
            raise ValueError("context does not match (q, n)")
        return context
    return splitting_context(q, n, None, max_order)


def from_defining_set(
    q: int,
    n: int,
    members,
    family: str = "custom",
    params: dict | None = None,
    *,
    context: SplittingContext | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
    trivial: bool = False,
) -> CyclicCode:
    ctx = _context(q, n, context, max_order)
    members = sorted(set(int(a) % n for a in members))
    gen = ctx.generator_from_set(members)
    T = IndexSet(n, q, ctx.m, tuple(members))
    return CyclicCode(q, n, T, gen, family, dict(params or {}), ctx, trivial)


def _primitive(q: int, m: int) -> int:
    prime_power(q)
    if m < 1:
        raise ValueError("m must be positive")
    return q**m - 1


def grm(q: int, m: int, h: int, *, context=None, max_order=DEFAULT_MAX_ORDER) -> CyclicCode:
    """Cyclic code whose defining set is every exponent with 1 <= wt(a) <= h."""
    n = _primitive(q, m)
    if m < 2:
        raise ValueError(f"grm needs m >= 2, got m={m}")
    if not 1 <= h <= m:
        raise ValueError(f"grm needs 1 <= h <= m, got h={h}, m={m}")
    ctx = _context(q, n, context, max_order)  # field budget is enforced here, before any O(n) work
    T = index_set(q, m, h)
    return from_defining_set(
        q, n, T.members, "grm", {"q": q, "m": m, "h": h}, context=ctx, trivial=(h == m),
    )


def pgrm_decomposition(q: int, ell: int) -> tuple[int, int]:
    """``ell = ell1*(q-1) + ell0`` with ``0 <= ell0 <= q-2``."""
    return divmod(ell, q - 1)


def pgrm(q: int, m: int, ell: int, *, context=None, max_order=DEFAULT_MAX_ORDER) -> CyclicCode:
    """Punctured generalised Reed-Muller code of order ``ell``."""
    n = _primitive(q, m)
    if not 0 <= ell <= m * (q - 1) - 1:
        raise ValueError(f"pgrm order must satisfy 0 <= ell <= {m * (q - 1) - 1}, got {ell}")
    ctx = _context(q, n, context, max_order)
    w = q_weight_array(q, m)[:n]
    members = [a for a in range(1, n) if w[a] < (q - 1) * m - ell]
    ell1, ell0 = pgrm_decomposition(q, ell)
    return from_defining_set(
        q, n, members, "pgrm", {"q": q, "m": m, "l": ell, "l1": ell1, "l0": ell0}, context=ctx,
    )


def bch(q: int, n: int, delta: int, b: int = 1, *, context=None, max_order=DEFAULT_MAX_ORDER) -> CyclicCode:
    """BCH code with designed distance ``delta``: zeros at ``beta^b, ..., beta^(b+delta-2)``."""
    if not 2 <= delta <= n:
        raise ValueError(f"designed distance must satisfy 2 <= delta <= n, got {delta}")
    ctx = _context(q, n, context, max_order)
    members = set()
    for i in range(delta - 1):
        members.update(ctx.cosets.coset((b + i) % n))
    return from_defining_set(
        q, n, members, "bch", {"q": q, "n": n, "delta": delta, "b": b}, context=ctx,
    )


def dual(c: CyclicCode) -> CyclicCode:
    """Dual code: defining set ``-(N minus T)``."""
    T = negate(complement_in_N(c.defining_set))
    return from_defining_set(
        c.q, c.n, T.members, "dual", {"of": {"family": c.family, "params": c.params}},
        context=c.context,
    )


def complement(c: CyclicCode) -> CyclicCode:
    """Code generated by the check polynomial of ``c``."""
    h = c.check_polynomial()
    T = complement_in_N(c.defining_set)
    out = CyclicCode(
        c.q, c.n, T, h, "complement", {"of": {"family": c.family, "params": c.params}}, c.context,
    )
    if h.degree != len(T):
        raise AssertionError("check polynomial degree disagrees with the complementary defining set")
    return out


def extend(c: CyclicCode) -> ExtendedCode:
    T = set(c.defining_set.members)
    Tbar = {0} | T | ({c.n} if 0 in T else set())
    return ExtendedCode(c, IndexSet(c.n, c.q, c.m, tuple(Tbar)))


def reversible_grm(
    q: int, m: int, h: int, *, allow_zero: bool = False, context=None, max_order=DEFAULT_MAX_ORDER,
) -> CyclicCode:
    """Reversible code generated by ``(x - 1) lcm(g, g*)`` with ``g`` the grm generator.

    The generator is built literally from the polynomials and cross-checked
    against the defining set ``{0} | I | -I``.
    """
    if not 1 <= h <= ceil(m / 2):
        raise ValueError(f"reversible_grm needs 1 <= h <= ceil(m/2) = {ceil(m / 2)}, got h={h}")
    base = grm(q, m, h, context=context, max_order=max_order)
    ctx = base.context
    g = base.generator
    x_minus_1 = Polynomial(ctx.base, [ctx.base.neg(1), 1])
    gen = (x_minus_1 * poly_lcm(g, reciprocal(g))).monic()
    I = base.defining_set
    T = I | negate(I) | {0}
    if gen != ctx.generator_from_set(T.members):
        raise AssertionError("reversible generator disagrees with its defining set")
    code = CyclicCode(q, base.n, T, gen, "reversible", {"q": q, "m": m, "h": h}, ctx)
    if code.k <= 0 and not allow_zero:
        raise ValueError(f"reversible_grm({q}, {m}, {h}) is the zero code")
    return code


def is_subcode(a: CyclicCode, b: CyclicCode) -> bool:
    """True when ``a`` is contained in ``b``.

    Decided both by defining sets (``T_b`` inside ``T_a``) and by divisibility
    of generators; the two must agree.
    """
    if (a.q, a.n) != (b.q, b.n):
        return False
    by_set = set(b.defining_set.members) <= set(a.defining_set.members)
    by_poly = b.generator.divides(a.generator)
    if by_set != by_poly:
        raise AssertionError("set and divisibility criteria disagree")
    return by_set


def is_reversible(c: CyclicCode) -> bool:
    T = set(c.defining_set.members)
    by_set = T == {(c.n - e) % c.n for e in T}
    if by_set != is_self_reciprocal(c.generator):
        raise AssertionError("root-set and reciprocal criteria disagree")
    return by_set


def is_lcd(c: CyclicCode) -> bool:
    """Dual equals complement and ``gcd(g, h*) = 1``."""
    h = c.check_polynomial()
    coprime = poly_gcd(c.generator, reciprocal(h)).degree == 0
    same = dual(c).defining_set.members == complement_in_N(c.defining_set).members
    return coprime and same


def generator_matrix(c: CyclicCode) -> np.ndarray:
    """``k x n`` matrix whose row ``i`` holds the coefficients of ``x^i g(x)``."""
    k, g = c.k, c.generator.coeffs
    out = np.zeros((k, c.n), dtype=np.int64)
    for i in range(k):
        out[i, i : i + len(g)] = g
    return out


def code_from_descriptor(d: dict, max_order: int = DEFAULT_MAX_ORDER):
    """Rebuild a code from :meth:`CyclicCode.descriptor` output and check its generator."""
    q, n = int(d["q"]), int(d["n"])
    members = d["base_defining_set"] if d.get("family") == "extended" else d["defining_set"]
    base_family = d["family"] if d.get("family") != "extended" else d["params"]["base"]["family"]
    base_params = d["params"] if d.get("family") != "extended" else d["params"]["base"]["params"]
    ext_modulus = tuple(d["field"]["modulus"]) if "field" in d else None
    ctx = splitting_context(q, n, ext_modulus, max_order)
    code = from_defining_set(q, n, members, base_family, base_params, context=ctx)
    if code.generator.to_list() != list(d["generator"]):
        raise ValueError("descriptor generator does not match its defining set")
    return extend(code) if d.get("family") == "extended" else code
