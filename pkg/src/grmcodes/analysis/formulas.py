"""Closed-form parameters and bounds for the code families."""

from __future__ import annotations

from math import ceil, comb


def _binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _ball(q: int, m: int, h: int) -> int:
    return sum(comb(m, i) * (q - 1) ** i for i in range(0, h + 1))


def grm_dimension(q: int, m: int, h: int) -> int:
    return q**m - _ball(q, m, h)


def grm_dual_dimension(q: int, m: int, h: int) -> int:
    return _ball(q, m, h) - 1


def grm_distance_bounds(q: int, m: int, h: int) -> tuple[int, int]:
    """Lower and upper bounds on the minimum distance of ``grm(q, m, h)``."""
    return (q ** (h + 1) - 1) // (q - 1), 2 * q**h - 1


def extended_grm_distance_bounds(q: int, m: int, h: int) -> tuple[int, int]:
    return (q ** (h + 1) - 1) // (q - 1), 2 * q**h


def grm_dual_distance_lower(q: int, m: int, h: int) -> int:
    return q ** (m - h) + q - 2


def pgrm_dimension(q: int, m: int, ell: int) -> int:
    return sum(
        (-1) ** j * comb(m, j) * _binom(i - j * q + m - 1, i - j * q)
        for i in range(ell + 1)
        for j in range(m + 1)
    )


def pgrm_distance(q: int, m: int, ell: int) -> int:
    ell1, ell0 = divmod(ell, q - 1)
    return (q - ell0) * q ** (m - ell1 - 1) - 1


def reversible_dimension(q: int, m: int, h: int) -> int:
    """Dimension of the reversible code for ``1 <= h <= ceil(m/2)``."""
    if 1 <= h <= ceil(m / 2) - 1:
        return q**m - 2 * _ball(q, m, h)
    if m % 2 == 0 and h == m // 2:
        return q**m - 2 * _ball(q, m, h) + comb(m, m // 2)
    if m % 2 == 1 and m >= 3 and h == (m + 1) // 2:
        overlap = (4 + (q - 2) * (m + 1)) * comb(m, (m - 1) // 2)
        assert overlap % 2 == 0
        return q**m - 2 * _ball(q, m, h) + overlap // 2
    raise ValueError(f"no closed form for reversible code with m={m}, h={h}")


def reversible_distance_lower(q: int, m: int, h: int) -> int:
    """BCH lower bound for the reversible code (runs of roots symmetric about 0)."""
    if 1 <= h <= ceil(m / 2) - 1:
        return 2 * (q ** (h + 1) - 1) // (q - 1)
    if m % 2 == 0 and h == m // 2:
        return 2 * (q ** ((m + 2) // 2) - 1) // (q - 1)
    if m % 2 == 1 and h == (m + 1) // 2:
        return 2 * (q ** ((m + 3) // 2) - 1) // (q - 1)
    raise ValueError(f"no bound for reversible code with m={m}, h={h}")


def closed_form_dimension(code) -> int | None:
    """Dimension predicted by the family's formula, or ``None`` when there is none."""
    fam, p = code.family, code.params
    if fam == "grm":
        return grm_dimension(p["q"], p["m"], p["h"])
    if fam == "pgrm":
        return pgrm_dimension(p["q"], p["m"], p["l"])
    if fam == "reversible":
        return reversible_dimension(p["q"], p["m"], p["h"])
    if fam in ("dual", "complement") and p["of"]["family"] == "grm":
        b = p["of"]["params"]
        return grm_dual_dimension(b["q"], b["m"], b["h"])
    return None


def paper_bounds(code) -> tuple[int | None, int | None]:
    """``(lower, upper)`` distance bounds known for the family, ``None`` where absent."""
    fam, p = code.family, code.params
    if fam == "grm" and p["h"] < p["m"]:
        return grm_distance_bounds(p["q"], p["m"], p["h"])
    if fam == "pgrm":
        d = pgrm_distance(p["q"], p["m"], p["l"])
        return d, d
    if fam == "reversible":
        return reversible_distance_lower(p["q"], p["m"], p["h"]), None
    if fam in ("dual", "complement") and p["of"]["family"] == "grm":
        b = p["of"]["params"]
        if b["h"] < b["m"]:
            return grm_dual_distance_lower(b["q"], b["m"], b["h"]), None
    if fam == "extended" and p["base"]["family"] == "grm":
        b = p["base"]["params"]
        if b["h"] < b["m"]:
            return extended_grm_distance_bounds(b["q"], b["m"], b["h"])
    return None, None
