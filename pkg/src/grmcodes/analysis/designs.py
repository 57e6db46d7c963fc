"""2-designs held by the supports of fixed-weight codewords."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

import numpy as np

from .enumeration import DEFAULT_MAX_ENUM, map_blocks


@dataclass(frozen=True)
class DesignCertificate:
    v: int
    k: int
    lam: int | None
    b: int
    t: int
    uniform: bool
    pair_coverage_histogram: dict[int, int]

    def arithmetic_ok(self) -> bool:
        """``lambda * C(v, 2) == b * C(k, 2)`` for uniform certificates."""
        return not self.uniform or self.lam * comb(self.v, 2) == self.b * comb(self.k, 2)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["lambda"] = d.pop("lam")
        d["pair_coverage_histogram"] = {str(k): v for k, v in sorted(self.pair_coverage_histogram.items())}
        return d


def supports_of_weight(code, weight: int, budget: int = DEFAULT_MAX_ENUM, threads: int = 1) -> np.ndarray:
    """Distinct supports of the weight-``weight`` codewords as a sorted 0/1 matrix."""
    G, f = code.generator_matrix(), code.field
    v = G.shape[1]

    def collect(block):
        sel = block[np.count_nonzero(block, axis=1) == weight]
        return np.unique(np.packbits(sel != 0, axis=1), axis=0)

    parts = [p for p in map_blocks(G, f, collect, budget, threads) if len(p)]
    if not parts:
        return np.zeros((0, v), dtype=np.uint8)
    packed = np.unique(np.vstack(parts), axis=0)
    return np.unpackbits(packed, axis=1, count=v)


def certificate_from_blocks(blocks: np.ndarray, v: int, k: int) -> DesignCertificate:
    """Count how many blocks contain each pair of points."""
    M = blocks.astype(np.int64)
    cover = M.T @ M
    iu = np.triu_indices(v, 1)
    pair = cover[iu]
    vals, counts = np.unique(pair, return_counts=True)
    hist = {int(a): int(c) for a, c in zip(vals, counts)}
    uniform = len(hist) == 1
    lam = int(vals[0]) if uniform else None
    return DesignCertificate(v, k, lam, int(len(blocks)), 2, uniform, hist)


def extract_design(code, weight: int, budget: int = DEFAULT_MAX_ENUM, threads: int = 1) -> DesignCertificate:
    blocks = supports_of_weight(code, weight, budget, threads)
    if not len(blocks):
        raise ValueError(f"no codewords of weight {weight}")
    return certificate_from_blocks(blocks, blocks.shape[1], weight)
