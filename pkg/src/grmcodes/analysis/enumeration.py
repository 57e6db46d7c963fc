"""Exhaustive codeword enumeration kernels.

Messages are split into an inner block, whose full span is tabulated once,
and an outer block, whose span vectors are added to the inner table one at a
time.  Work is partitioned over the outer vectors; every reduction (weight
histogram, support collection) is merged in a fixed order so results do not
depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator

import numpy as np

from ..field import FieldTable

DEFAULT_MAX_ENUM = 2**24
_INNER_ELEMENTS = 1 << 22


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its codeword budget."""


class Adder:
    """Vectorised addition over a small GF(q) on ``uint8``/``uint16`` arrays."""

    def __init__(self, f: FieldTable):
        self.f = f
        add, mul = f.tables()
        self.mul_table = mul.astype(np.uint8 if f.order <= 127 else np.uint16)
        self.add_flat = add.reshape(-1).astype(self.mul_table.dtype)
        self.dtype = self.mul_table.dtype

    def __call__(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        f = self.f
        if f.p == 2:
            return a ^ b
        if f.k == 1:
            s = a + b
            s %= f.p
            return s
        return self.add_flat[a.astype(np.int64) * f.order + b]

    def scaled_rows(self, G: np.ndarray) -> np.ndarray:
        """``out[c, i] = c * G[i]`` for every scalar ``c``."""
        return self.mul_table[:, G.astype(np.int64)]


def span_table(rows: np.ndarray, adder: Adder) -> np.ndarray:
    """All ``q^r`` linear combinations of the ``r`` given rows, as a ``(q^r, n)`` array."""
    n = rows.shape[1] if rows.ndim == 2 else 0
    table = np.zeros((1, n), dtype=adder.dtype)
    scaled = adder.scaled_rows(rows) if len(rows) else None
    for i in range(len(rows)):
        s = scaled[:, i, :]
        table = adder(table[None, :, :], s[:, None, :]).reshape(-1, n)
    return table


def _split(k: int, q: int, n: int) -> int:
    cap = max(1, _INNER_ELEMENTS // max(n, 1))
    r = 0
    while r < k and q ** (r + 1) <= cap:
        r += 1
    return r


def codeword_blocks(
    G: np.ndarray, f: FieldTable, budget: int = DEFAULT_MAX_ENUM
) -> tuple[np.ndarray, np.ndarray, Adder]:
    """Inner span table and outer span vectors covering every codeword once."""
    G = np.asarray(G)
    k = G.shape[0]
    if f.order**k > budget:
        raise BudgetExceeded(f"{f.order}^{k} codewords exceed the enumeration budget {budget}")
    adder = Adder(f)
    G = G.astype(adder.dtype)
    r = _split(k, f.order, G.shape[1])
    return span_table(G[:r], adder), span_table(G[r:], adder), adder


def map_blocks(
    G: np.ndarray,
    f: FieldTable,
    fn: Callable[[np.ndarray], object],
    budget: int = DEFAULT_MAX_ENUM,
    threads: int = 1,
) -> list:
    """Apply ``fn`` to every block of codewords; results come back in a fixed order."""
    inner, outer, adder = codeword_blocks(G, f, budget)

    def work(lo_hi):
        lo, hi = lo_hi
        return [fn(adder(inner, outer[j][None, :])) for j in range(lo, hi)]

    n_outer = len(outer)
    chunks = max(1, min(threads * 4, n_outer))
    bounds = np.linspace(0, n_outer, chunks + 1).astype(int)
    ranges = [(int(bounds[i]), int(bounds[i + 1])) for i in range(chunks)]
    if threads <= 1:
        parts = [work(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(work, ranges))
    return [x for part in parts for x in part]


def iter_codewords(G: np.ndarray, f: FieldTable, budget: int = DEFAULT_MAX_ENUM) -> Iterator[np.ndarray]:
    inner, outer, adder = codeword_blocks(G, f, budget)
    for v in outer:
        yield adder(inner, v[None, :])


def weight_histogram(
    G: np.ndarray, f: FieldTable, budget: int = DEFAULT_MAX_ENUM, threads: int = 1
) -> np.ndarray:
    """``A[i]`` = number of codewords of weight ``i`` in the row space of ``G``."""
    n = G.shape[1]

    def hist(block):
        return np.bincount(np.count_nonzero(block, axis=1), minlength=n + 1)

    parts = map_blocks(G, f, hist, budget, threads)
    total = np.zeros(n + 1, dtype=np.int64)
    for h in parts:
        total += h
    return total
