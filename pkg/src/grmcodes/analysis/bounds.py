"""Lower bounds on minimum distance from a defining set."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np


def _mask(T, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=bool)
    idx = np.asarray([t % n for t in T], dtype=np.int64)
    if idx.size:
        out[idx] = True
    return out


def run_lengths(mask: np.ndarray) -> np.ndarray:
    """``out[x]`` = length of the cyclic run of members starting at ``x``.

    Only meaningful when the mask is not full.
    """
    n = len(mask)
    out = np.zeros(n, dtype=np.int64)
    # walk backwards twice around the circle so runs wrapping past n-1 are counted
    run = 0
    for x in list(range(n - 1, -1, -1)) * 2:
        run = run + 1 if mask[x] else 0
        out[x] = run
    return np.minimum(out, n)


def maximal_runs(mask: np.ndarray) -> list[tuple[int, int]]:
    """``(start, length)`` of every maximal cyclic run of members."""
    n = len(mask)
    rl = run_lengths(mask)
    return [(x, int(rl[x])) for x in range(n) if mask[x] and not mask[(x - 1) % n]]


def bch_bound(T, n: int) -> int:
    """One more than the longest cyclically consecutive run inside ``T``."""
    mask = _mask(T, n)
    if mask.all():
        return n + 1
    if not mask.any():
        return 1
    return int(run_lengths(mask).max()) + 1


@dataclass(frozen=True)
class HTSearchCaps:
    max_runs: int = 4096
    max_s: int = 10**6


@dataclass(frozen=True)
class HTWitness:
    bound: int
    start: int
    delta: int
    b: int
    s: int


def hartmann_tzeng_search(T, n: int, caps: HTSearchCaps | None = None) -> HTWitness:
    """Best ``delta + s`` over maximal runs ``A`` and steps ``b`` with ``gcd(b, n) < delta``.

    ``A + {j b : 0 <= j <= s}`` must lie inside ``T`` (indices modulo ``n``).
    The returned bound is never below the BCH bound.
    """
    caps = caps or HTSearchCaps()
    mask = _mask(T, n)
    bch = bch_bound(T, n)
    if mask.all() or not mask.any():
        # no run to point at
        return HTWitness(bch, -1, bch, 0, 0)
    rl = run_lengths(mask)
    runs = sorted(maximal_runs(mask), key=lambda r: (-r[1], r[0]))[: caps.max_runs]
    # the BCH bound itself, as the witness with b = 1 and s = 0
    best = HTWitness(bch, runs[0][0], bch, 1, 0)
    bs = np.arange(1, n, dtype=np.int64)
    g = np.gcd(bs, n)
    for start, length in runs:
        delta = length + 1
        sel = g < delta
        cand = bs[sel]
        period = n // g[sel]  # B must consist of distinct elements
        if not cand.size:
            continue
        s = np.zeros(cand.size, dtype=np.int64)
        alive = np.ones(cand.size, dtype=bool)
        j = 1
        while alive.any() and j <= caps.max_s:
            alive &= (rl[(start + j * cand) % n] >= length) & (j < period)
            s += alive
            j += 1
        i = int(np.argmax(s))
        if delta + s[i] > best.bound:
            best = HTWitness(int(delta + s[i]), start, delta, int(cand[i]), int(s[i]))
    return best


def hartmann_tzeng_bound(T, n: int, q: int | None = None, caps: HTSearchCaps | None = None) -> int:
    return hartmann_tzeng_search(T, n, caps).bound


def check_ht_witness(T, n: int, w: HTWitness) -> bool:
    """Independently confirm a Hartmann-Tzeng witness by direct set membership."""
    T = {t % n for t in T}
    if w.start < 0:
        # reserved for the full and empty sets
        return w.bound == (n + 1 if len(T) == n else 1 if not T else -1)
    A = [(w.start + i) % n for i in range(w.delta - 1)]
    if gcd(w.b, n) >= w.delta:
        return False
    return all((a + j * w.b) % n in T for a in A for j in range(w.s + 1))
