"""Affine invariance of extended primitive cyclic codes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class AffineCheck:
    invariant: bool
    witness: tuple[int, int] | None = None  # (r, s): r precedes s, s in the set, r not

    def __bool__(self):
        return self.invariant


def is_affine_invariant(Tbar, p: int, total_digits: int) -> AffineCheck:
    """Kasami-Lin-Peterson test: the set must be downward closed in the p-adic digit order.

    It suffices to test single-digit decrements, since every ``r`` below
    ``s`` is reached from ``s`` by a chain of them.
    """
    members = sorted({int(t) for t in Tbar})
    top = p**total_digits - 1
    if members and (members[0] < 0 or members[-1] > top):
        raise ValueError(f"members must lie in 0..{top}")
    inside = set(members)
    for s in members:
        w, t = 1, s
        for _ in range(total_digits):
            if t % p:
                r = s - w
                if r not in inside:
                    return AffineCheck(False, (r, s))
            t //= p
            w *= p
    return AffineCheck(True)


def affine_group_preserves(ext_code, samples: int | None = None, seed: int = 0) -> bool:
    """Directly check that maps ``y -> a*y + b`` on GF(q^m) send the code into itself.

    Coordinates are ``alpha^0 .. alpha^(n-1)`` followed by ``0`` (the extension
    coordinate).  Membership is tested against a parity-check matrix.  Used
    as an independent oracle on small codes.
    """
    from .linalg import null_space

    ctx = ext_code.context
    ext, f = ctx.ext, ext_code.field
    n = ext_code.n
    G = ext_code.generator_matrix()
    H = null_space(G, f)
    # position of each field element in the coordinate order
    pos = np.empty(ext.order, dtype=np.int64)
    pos[ext.exp[:n]] = np.arange(n)
    pos[0] = n
    coords = np.concatenate([ext.exp[:n], [0]])
    pairs = [(a, b) for a in ext.exp[:n].tolist() for b in range(ext.order)]
    if samples is not None and samples < len(pairs):
        rng = np.random.default_rng(seed)
        pairs = [pairs[i] for i in rng.choice(len(pairs), samples, replace=False)]
    for a, b in pairs:
        image = pos[ext.add_vec(ext.mul_vec(a, coords), b)]
        # codeword c maps to c' with c'[image[i]] = c[i]
        Gp = np.zeros_like(G)
        Gp[:, image] = G
        syn = np.zeros((Gp.shape[0], H.shape[0]), dtype=np.int64)
        for j in range(Gp.shape[1]):
            syn = f.add_vec(syn, f.mul_vec(Gp[:, j][:, None], H[:, j][None, :]))
        if np.any(syn):
            return False
    return True
