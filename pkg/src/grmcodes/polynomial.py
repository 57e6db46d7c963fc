"""Dense univariate polynomials over a :class:`~grmcodes.field.FieldTable`."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np

from .cyclotomic import all_cosets
from .field import (
    DEFAULT_MAX_ORDER,
    Embedding,
    FieldTable,
    field_create,
    multiplicative_order,
    prime_power,
    subfield_embed,
)


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


class Polynomial:
    """Polynomial with ascending coefficients; the zero polynomial has no coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldTable, coeffs: Iterable[int] | np.ndarray):
        c = np.array(coeffs, dtype=np.int64).reshape(-1)
        if c.size and (c.min() < 0 or c.max() >= field.order):
            raise ValueError(f"coefficients must be elements of GF({field.order})")
        self.field = field
        self.coeffs = _trim(c)
        self.coeffs.setflags(write=False)

    # construction helpers

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @classmethod
    def monomial(cls, field, degree: int, c: int = 1):
        out = np.zeros(degree + 1, dtype=np.int64)
        out[degree] = c
        return cls(field, out)

    @classmethod
    def x_n_minus_1(cls, field, n: int):
        out = np.zeros(n + 1, dtype=np.int64)
        out[0] = field.neg(1)
        out[n] = 1
        return cls(field, out)

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def leading(self) -> int:
        return int(self.coeffs[-1]) if len(self.coeffs) else 0

    def to_list(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"Polynomial(GF({self.field.order}), {self.to_list()})"

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.field, tuple(self.to_list())))

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError("expected a Polynomial")
        if other.field != self.field:
            raise ValueError("polynomials live over different fields")

    # ring operations

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] = self.field.add_vec(a[: len(b)], b)
        return Polynomial(self.field, out)

    def __neg__(self):
        return Polynomial(self.field, self.field.neg_vec(self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.field, self.field.scale_vec(c, self.coeffs))

    def __mul__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not len(a) or not len(b):
            return Polynomial.zero(self.field)
        f = self.field
        if f.k == 1 and min(len(a), len(b)) * (f.p - 1) ** 2 < 2**62:
            return Polynomial(f, np.convolve(a, b) % f.p)
        if len(a) < len(b):
            a, b = b, a
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for j, c in enumerate(b):
            if c:
                seg = out[j : j + len(a)]
                out[j : j + len(a)] = f.add_vec(seg, f.scale_vec(int(c), a))
        return Polynomial(f, out)

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        r = self.coeffs.copy()
        b = other.coeffs
        db = len(b) - 1
        if len(r) - 1 < db:
            return Polynomial.zero(f), self
        inv_lead = f.inv(int(b[-1]))
        quot = np.zeros(len(r) - db, dtype=np.int64)
        for i in range(len(r) - 1, db - 1, -1):
            c = int(r[i])
            if not c:
                continue
            t = f.mul(c, inv_lead)
            quot[i - db] = t
            r[i - db : i + 1] = f.sub_vec(r[i - db : i + 1], f.scale_vec(t, b))
        return Polynomial(f, quot), Polynomial(f, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True if ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.leading))

    def __call__(self, x: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), int(c))
        return acc

    def evaluate(self, xs) -> np.ndarray:
        """Evaluate at many points (Horner, vectorised over the points)."""
        f = self.field
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = f.add_vec(f.mul_vec(acc, xs), int(c))
        return acc


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``gcd(0, 0) = 0``."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero() or b.is_zero():
        return Polynomial.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def reciprocal(f: Polynomial) -> Polynomial:
    """``f_0^{-1} x^{deg f} f(1/x)``."""
    if f.is_zero() or f.coeffs[0] == 0:
        raise ValueError("reciprocal needs a nonzero constant term")
    return Polynomial(f.field, f.coeffs[::-1]).scale(f.field.inv(int(f.coeffs[0])))


def is_self_reciprocal(f: Polynomial) -> bool:
    return reciprocal(f) == f


def product(polys: Iterable[Polynomial], field: FieldTable) -> Polynomial:
    out = Polynomial.one(field)
    for p in polys:
        out = out * p
    return out


class SplittingContext:
    """Fields, embedding and cosets for cyclic codes of length ``n`` over GF(q).

    ``beta = alpha^((q^m - 1)/n)`` with ``alpha`` the class of ``x`` in the
    extension field GF(q^m), ``m = ord_n(q)``.
    """

    def __init__(self, q: int, n: int, ext_modulus=None, max_order: int = DEFAULT_MAX_ORDER):
        p, s = prime_power(q)
        self.q, self.n, self.p, self.s = q, n, p, s
        self.m = multiplicative_order(q, n)
        self.base = field_create(p, s, max_order=max_order)
        self.ext = field_create(p, s * self.m, modulus=ext_modulus, max_order=max_order)
        self.embedding: Embedding = subfield_embed(self.ext, self.base)
        self.cosets = all_cosets(n, q)
        self.beta_step = (self.ext.order - 1) // n
        self._minpolys: dict[int, Polynomial] = {}

    def beta_power(self, e: int) -> int:
        return int(self.ext.exp[(e % self.n) * self.beta_step])

    def minimal_polynomial(self, s: int) -> Polynomial:
        leader = self.cosets.leader_of[s % self.n]
        if leader not in self._minpolys:
            self._minpolys[leader] = _minimal_polynomial(self, leader)
        return self._minpolys[leader]

    def generator_from_set(self, members) -> Polynomial:
        """``prod (x - beta^a)`` over a union of cosets, as a polynomial over GF(q)."""
        members = set(members)
        if not self.cosets.is_union_of_cosets(members):
            raise ValueError("defining set is not a union of cyclotomic cosets")
        return product((self.minimal_polynomial(s) for s in self.cosets.leaders_in(members)), self.base)

    def root_exponents(self, g: Polynomial) -> list[int]:
        """Exponents ``e`` with ``g(beta^e) = 0``."""
        ext = self.ext
        lifted = Polynomial(ext, self.embedding.forward[g.coeffs])
        pts = ext.exp[np.arange(self.n) * self.beta_step]
        return np.flatnonzero(lifted.evaluate(pts) == 0).tolist()


def _minimal_polynomial(ctx: SplittingContext, s: int) -> Polynomial:
    ext = ctx.ext
    acc = Polynomial.one(ext)
    for i in ctx.cosets.coset(s):
        acc = acc * Polynomial(ext, [ext.neg(ctx.beta_power(i)), 1])
    try:
        coeffs = ctx.embedding.pull_back(acc.coeffs)
    except ValueError as exc:
        raise ValueError(f"minimal polynomial of beta^{s} has coefficients outside GF({ctx.q})") from exc
    return Polynomial(ctx.base, coeffs)


@lru_cache(maxsize=32)
def splitting_context(q: int, n: int, ext_modulus=None, max_order: int = DEFAULT_MAX_ORDER) -> SplittingContext:
    return SplittingContext(q, n, ext_modulus, max_order)


def minimal_polynomial(s: int, q: int, n: int, ext_modulus=None) -> Polynomial:
    """Minimal polynomial of ``beta^s`` over GF(q), ``beta`` a primitive ``n``-th root of unity."""
    if not 0 <= s < n:
        raise ValueError(f"exponent must lie in 0..{n - 1}")
    return splitting_context(q, n, ext_modulus).minimal_polynomial(s)


def factor_xn_minus_1(n: int, q: int, max_order: int = DEFAULT_MAX_ORDER) -> dict[int, Polynomial]:
    """Irreducible factors of ``x^n - 1`` over GF(q), keyed by coset leader."""
    ctx = splitting_context(q, n, None, max_order)
    return {s: ctx.minimal_polynomial(s) for s in ctx.cosets.leaders}
