"""Finite fields GF(p^k) backed by log/antilog tables.

Elements are encoded as integers in ``[0, p^k)`` whose base-``p`` digits are
the coordinates in the polynomial basis ``1, x, ..., x^(k-1)``.  The modulus
is the lexicographically smallest primitive polynomial of degree ``k``, so the
class of ``x`` is a generator of the multiplicative group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Sequence

import numpy as np

DEFAULT_MAX_ORDER = 2**20


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(v: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    """Multiply ``a*b`` modulo the monic ``mod`` over GF(p); lists are ascending."""
    k = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    return prod[:k] + [0] * (k - len(prod[:k]))


def _x_power(e: int, mod: list[int], p: int) -> list[int]:
    k = len(mod) - 1
    result = [1] + [0] * (k - 1)
    base = ([0, 1] + [0] * k)[:k] if k > 1 else [(-mod[0]) % p]
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive(mod: Sequence[int], p: int) -> bool:
    """True when the monic ``mod`` (ascending) has a root of order ``p^k - 1``."""
    mod = [int(c) % p for c in mod]
    k = len(mod) - 1
    if k < 1 or mod[-1] != 1 or mod[0] == 0:
        return False
    order = p**k - 1
    one = [1] + [0] * (k - 1)
    if _x_power(order, mod, p) != one:
        return False
    return all(_x_power(order // r, mod, p) != one for r in prime_factors(order))


def smallest_primitive_polynomial(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        # x - g for the smallest primitive root g
        for g in range(1, p):
            if is_primitive([(-g) % p, 1], p):
                return ((-g) % p, 1)
    for value in range(p**k, 2 * p**k):
        coeffs = _digits(value, p, k) + [1]
        if coeffs[0] and is_primitive(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError(f"no primitive polynomial of degree {k} over GF({p})")  # unreachable


@dataclass(frozen=True, eq=False)
class FieldTable:
    """GF(p^k) with exp/log tables.

    ``exp`` has length ``2*(order-1)`` so products of two logs index it
    without a reduction; ``log[0]`` is ``-1``.
    """

    p: int
    k: int
    modulus: tuple[int, ...]
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def generator(self) -> int:
        return int(self.exp[1]) if self.order > 2 else 1

    def describe(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (
            isinstance(other, FieldTable)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        out, w = 0, 1
        while a or b:
            out += ((a + b) % self.p) * w
            a //= self.p
            b //= self.p
            w *= self.p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        out, w = 0, 1
        while a:
            out += ((-a) % self.p) * w
            a //= self.p
            w *= self.p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.order)
        return int(self.exp[(self.order - 1 - self.log[a]) % (self.order - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.order - 1)])

    def arithmetic(self, a: int, b: int | None, op: str) -> int:
        if op == "add":
            return self.add(a, b)
        if op == "mul":
            return self.mul(a, b)
        if op == "inv":
            return self.inv(a)
        if op == "pow":
            return self.pow(a, b)
        raise ValueError(f"unknown operation {op!r}")

    # vectorised arithmetic on integer arrays

    def add_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        w = 1
        for _ in range(self.k):
            out += (((a // w) + (b // w)) % self.p) * w
            w *= self.p
        return out

    def neg_vec(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.k == 1:
            return (-a) % self.p
        out = np.zeros_like(a)
        w = 1
        for _ in range(self.k):
            out += ((-(a // w)) % self.p) * w
            w *= self.p
        return out

    def sub_vec(self, a, b) -> np.ndarray:
        return self.add_vec(a, self.neg_vec(b))

    def mul_vec(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        res = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, res).astype(np.int64)

    def scale_vec(self, c: int, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if c == 0:
            return np.zeros_like(a)
        if c == 1:
            return a.copy()
        res = self.exp[self.log[a] + self.log[c]]
        return np.where(a == 0, 0, res).astype(np.int64)

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Full addition and multiplication tables (small fields only)."""
        return _tables(self)


@lru_cache(maxsize=None)
def _tables(f: FieldTable) -> tuple[np.ndarray, np.ndarray]:
    if f.order > 4096:
        raise ValueError("full operation tables are only built for fields of order <= 4096")
    r = np.arange(f.order)
    add = f.add_vec(r[:, None], r[None, :]).astype(np.uint16)
    mul = f.mul_vec(r[:, None], r[None, :]).astype(np.uint16)
    return add, mul


def _build(p: int, k: int, modulus: tuple[int, ...]) -> FieldTable:
    order = p**k
    size = order - 1
    exp = np.zeros(2 * size if size else 2, dtype=np.int64)
    if k == 1:
        g = (-modulus[0]) % p
        v = 1
        for e in range(size):
            exp[e] = v
            v = v * g % p
    else:
        top = p ** (k - 1)
        low = [(-c) % p for c in modulus[:k]]  # x^k = sum low_j x^j
        low_enc = sum(c * p**j for j, c in enumerate(low))
        digits_low = low
        v = 1
        for e in range(size):
            exp[e] = v
            c = v // top
            v = (v % top) * p
            if c:
                if p == 2:
                    v ^= low_enc
                else:
                    out, w, vv = 0, 1, v
                    for j in range(k):
                        out += ((vv % p + c * digits_low[j]) % p) * w
                        vv //= p
                        w *= p
                    v = out
    if size:
        exp[size:] = exp[:size]
    log = np.full(order, -1, dtype=np.int64)
    log[exp[:size]] = np.arange(size)
    if size and (len(set(exp[:size].tolist())) != size):
        raise ValueError(f"modulus {modulus} is not primitive over GF({p})")
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldTable(p, k, tuple(int(c) for c in modulus), exp, log)


@lru_cache(maxsize=64)
def _field_cached(p: int, k: int, modulus: tuple[int, ...] | None) -> FieldTable:
    if modulus is None:
        modulus = smallest_primitive_polynomial(p, k)
    return _build(p, k, modulus)


def field_create(
    p: int,
    k: int = 1,
    modulus: Sequence[int] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> FieldTable:
    """Construct GF(p^k).

    Parameters
    ----------
    p, k : int
        Characteristic (prime) and extension degree.
    modulus : sequence of int, optional
        Ascending coefficients of a monic primitive polynomial of degree ``k``.
        Defaults to the lexicographically smallest one.
    max_order : int
        Refuse to build tables for fields larger than this.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p**k > max_order:
        raise ValueError(f"GF({p}^{k}) exceeds the table budget of {max_order} elements")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or not is_primitive(modulus, p):
            raise ValueError(f"{modulus} is not a primitive polynomial of degree {k} over GF({p})")
    return _field_cached(p, k, modulus)


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, s)`` with ``q = p^s``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, s


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1
    e, v = 1, a % n
    while v != 1:
        v = v * a % n
        e += 1
    return e


@dataclass(frozen=True, eq=False)
class Embedding:
    """Field homomorphism GF(q) -> GF(q^m) as a lookup array, with its inverse."""

    base: FieldTable
    ext: FieldTable
    forward: np.ndarray = field(repr=False)
    backward: np.ndarray = field(repr=False)  # ext element -> base element, -1 outside image

    def __call__(self, a):
        return self.forward[a]

    def pull_back(self, a):
        """Map ext elements back into the base field; raise if any is outside the image."""
        out = self.backward[np.asarray(a, dtype=np.int64)]
        if np.any(out < 0):
            raise ValueError("element lies outside the embedded subfield")
        return out


def _eval_prime_poly(f: FieldTable, coeffs: Sequence[int], x: int) -> int:
    # coefficients are prime-field values, whose encodings agree in every extension
    acc = 0
    for c in reversed(coeffs):
        acc = f.add(f.mul(acc, x), int(c))
    return acc


@lru_cache(maxsize=64)
def subfield_embed(ext: FieldTable, base: FieldTable) -> Embedding:
    """Embed GF(q) into GF(q^m) by mapping the base generator to a root of its modulus."""
    if ext.p != base.p or ext.k % base.k != 0:
        raise ValueError(f"GF({base.order}) is not a subfield of GF({ext.order})")
    q, Q = base.order, ext.order
    forward = np.zeros(q, dtype=np.int64)
    if q == 2:
        forward[1] = 1
    else:
        step = (Q - 1) // (q - 1)
        for j in range(1, q - 1):
            if gcd(j, q - 1) != 1:
                continue
            cand = int(ext.exp[j * step])
            if _eval_prime_poly(ext, base.modulus, cand) == 0:
                break
        else:  # pragma: no cover - a root always exists
            raise RuntimeError("no root of the base modulus in the extension")
        for e in range(q - 1):
            forward[base.exp[e]] = ext.exp[(j * step * e) % (Q - 1)]
    backward = np.full(Q, -1, dtype=np.int64)
    backward[forward] = np.arange(q)
    forward.setflags(write=False)
    backward.setflags(write=False)
    return Embedding(base, ext, forward, backward)
