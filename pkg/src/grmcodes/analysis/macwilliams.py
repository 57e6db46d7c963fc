"""MacWilliams transform of weight distributions over GF(q)."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Sequence


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
        for s in range(0, min(i, j) + 1)
    )


def macwilliams_transform(A: Sequence[int], q: int) -> list[int]:
    """Weight distribution of the dual code from that of the code.

    Raises ``ValueError`` when the result is not integral, which means the
    input was not the distribution of a linear code.
    """
    n = len(A) - 1
    size = sum(int(a) for a in A)
    out = []
    for j in range(n + 1):
        b = Fraction(sum(int(A[i]) * krawtchouk(j, i, n, q) for i in range(n + 1)), size)
        if b.denominator != 1:
            raise ValueError("non-integral MacWilliams transform")
        out.append(int(b))
    return out
