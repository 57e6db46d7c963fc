"""Cyclotomic cosets, q-adic digit functions and the index sets built on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, gcd
from typing import Iterable

import numpy as np


def _check_coprime(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    if gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) = gcd({n}, {q}) != 1")


def coset_of(s: int, n: int, q: int) -> tuple[int, ...]:
    """Sorted orbit of ``s`` under multiplication by ``q`` modulo ``n``."""
    _check_coprime(n, q)
    s %= n
    out = {s}
    t = s * q % n
    while t != s:
        out.add(t)
        t = t * q % n
    return tuple(sorted(out))


@dataclass(frozen=True)
class CosetStructure:
    n: int
    q: int
    cosets: tuple[tuple[int, ...], ...]
    leader_of: tuple[int, ...]  # element -> its coset leader

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)

    def coset(self, s: int) -> tuple[int, ...]:
        return self.cosets[self._index[self.leader_of[s % self.n]]]

    @cached_property
    def _index(self) -> dict[int, int]:
        return {c[0]: i for i, c in enumerate(self.cosets)}

    def is_union_of_cosets(self, members: Iterable[int]) -> bool:
        members = set(members)
        return all(set(self.coset(s)) <= members for s in members)

    def leaders_in(self, members: Iterable[int]) -> list[int]:
        return sorted({self.leader_of[s] for s in members})


@lru_cache(maxsize=64)
def all_cosets(n: int, q: int) -> CosetStructure:
    _check_coprime(n, q)
    leader_of = [-1] * n
    cosets = []
    for s in range(n):
        if leader_of[s] >= 0:
            continue
        c = coset_of(s, n, q)
        for t in c:
            leader_of[t] = s
        cosets.append(c)
    return CosetStructure(n, q, tuple(cosets), tuple(leader_of))


# q-adic digit functions


def digits(a: int, q: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(a % q)
        a //= q
    return out


def q_weight(a: int, q: int, m: int) -> int:
    """Sum of the base-``q`` digits of ``a``."""
    return sum(digits(a, q, m))


def digit_hamming_weight(a: int, q: int, m: int) -> int:
    """Number of nonzero base-``q`` digits of ``a``."""
    return sum(1 for d in digits(a, q, m) if d)


def gamma(a: int, q: int, m: int) -> int:
    """Number of base-``q`` digits strictly between ``0`` and ``q-1``."""
    return sum(1 for d in digits(a, q, m) if 0 < d < q - 1)


@lru_cache(maxsize=32)
def digit_array(q: int, m: int) -> np.ndarray:
    """``(q^m, m)`` array of the base-``q`` digits of ``0..q^m-1`` (least significant first)."""
    a = np.arange(q**m, dtype=np.int64)
    out = np.empty((q**m, m), dtype=np.int64)
    for j in range(m):
        out[:, j] = a % q
        a //= q
    out.setflags(write=False)
    return out


def weight_array(q: int, m: int) -> np.ndarray:
    """``wt(a)`` for every ``0 <= a <= q^m-1``."""
    return np.count_nonzero(digit_array(q, m), axis=1)


def q_weight_array(q: int, m: int) -> np.ndarray:
    return digit_array(q, m).sum(axis=1)


def gamma_array(q: int, m: int) -> np.ndarray:
    d = digit_array(q, m)
    return np.count_nonzero((d > 0) & (d < q - 1), axis=1)


@dataclass(frozen=True)
class IndexSet:
    """A set of exponents modulo ``n = q^m - 1``; ``n`` itself may appear as a marker."""

    n: int
    q: int
    m: int
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(int(a) for a in self.members))))
        if self.members and (self.members[0] < 0 or self.members[-1] > self.n):
            raise ValueError("index set members must lie in 0..n")

    def __contains__(self, a):
        return a in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.members)

    def as_set(self) -> frozenset:
        return self._set

    def mask(self) -> np.ndarray:
        """Boolean membership over ``0..n``."""
        out = np.zeros(self.n + 1, dtype=bool)
        out[list(self.members)] = True
        return out

    def with_members(self, members: Iterable[int]) -> "IndexSet":
        return IndexSet(self.n, self.q, self.m, tuple(members))

    def __or__(self, other):
        return self.with_members(self._set | set(other))

    def __and__(self, other):
        return self.with_members(self._set & set(other))

    def __sub__(self, other):
        return self.with_members(self._set - set(other))

    def __le__(self, other):
        return self._set <= set(other)


def _nm(q: int, m: int) -> int:
    if q < 2 or m < 1:
        raise ValueError(f"need q >= 2 and m >= 1, got q={q}, m={m}")
    return q**m - 1


def index_set(q: int, m: int, h: int) -> IndexSet:
    """``{1 <= a <= n-1 : 1 <= wt(a) <= h}``."""
    n = _nm(q, m)
    if not 1 <= h <= m:
        raise ValueError(f"h must satisfy 1 <= h <= m, got h={h}, m={m}")
    wt = weight_array(q, m)[:n]
    return IndexSet(n, q, m, tuple(np.flatnonzero((wt >= 1) & (wt <= h)).tolist()))


def weight_level(q: int, m: int, i: int) -> IndexSet:
    """``N(i) = {a in 0..n-1 : wt(a) = i}``."""
    n = _nm(q, m)
    wt = weight_array(q, m)[:n]
    return IndexSet(n, q, m, tuple(np.flatnonzero(wt == i).tolist()))


def negate(s: IndexSet) -> IndexSet:
    """``{n - a mod n : a in S}``."""
    return s.with_members((s.n - a) % s.n for a in s.members)


def complement_in_N(s: IndexSet) -> IndexSet:
    """``{0..n-1}`` minus ``S`` (a marker ``n`` in ``S`` is ignored)."""
    return s.with_members(set(range(s.n)) - s.as_set())


def index_set_size(q: int, m: int, h: int) -> int:
    return sum(comb(m, i) * (q - 1) ** i for i in range(1, h + 1))


def p_adic_leq(r: int, s: int, p: int, total_digits: int) -> bool:
    """``r`` precedes ``s`` in the digit-wise partial order of base ``p``."""
    if p == 2:
        return r & s == r
    for _ in range(total_digits):
        if r % p > s % p:
            return False
        r //= p
        s //= p
    return True
