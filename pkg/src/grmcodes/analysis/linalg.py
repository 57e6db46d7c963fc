"""Row reduction over small fields GF(q)."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..field import FieldTable


def row_reduce(
    G: np.ndarray, f: FieldTable, columns: Sequence[int] | None = None
) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form using pivots drawn from ``columns`` (in order).

    Returns the reduced matrix with pivot rows first and the list of pivot
    columns.  Rows past the pivots are zero on every column of ``columns``.
    """
    A = np.array(G, dtype=np.int64, copy=True)
    rows = A.shape[0]
    if columns is None:
        columns = range(A.shape[1])
    pivots = []
    r = 0
    for c in columns:
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if not nz.size:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = f.scale_vec(f.inv(int(A[r, c])), A[r])
        for i in np.flatnonzero(A[:, c]):
            if i != r:
                A[i] = f.sub_vec(A[i], f.scale_vec(int(A[i, c]), A[r]))
        pivots.append(int(c))
        r += 1
    return A, pivots


def rank(G: np.ndarray, f: FieldTable) -> int:
    if G.size == 0:
        return 0
    return len(row_reduce(G, f)[1])


def null_space(G: np.ndarray, f: FieldTable, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of ``{x : G x^T = 0}``."""
    if n is None:
        n = G.shape[1]
    if G.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = row_reduce(G, f)
    R = R[: len(pivots)]
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, c in enumerate(free):
        out[t, c] = 1
        for i, pc in enumerate(pivots):
            out[t, pc] = f.neg(int(R[i, c]))
    return out


def same_row_space(A: np.ndarray, B: np.ndarray, f: FieldTable) -> bool:
    ra, rb = rank(A, f), rank(B, f)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(np.vstack([A, B]), f) == ra
