"""Minimal-width Queen-function decomposition of arbitrary permutations.

Feasibility of a segment is closed under taking sub-segments, so cutting
each segment as late as possible (greedy) yields the minimum width.  Width
is defined for any permutation, solution or not.
"""

from __future__ import annotations

from functools import lru_cache

from queenfn.core import Arrangement, LinearMap, QueenFunction, Segment, SymmetryOp, apply_symmetry
from queenfn.errors import InvalidInput

__all__ = ["fit_class", "fit_segment", "min_width", "orbit_min_width"]

_DEFAULT = LinearMap(1, 0)


def fit_class(a: Arrangement, rows: list[int]) -> LinearMap | None:
    """Smallest-``a`` linear map matching ``a.perm`` on ``rows``, or None.

    Tries every multiplier in [1, n] and derives the offset from the first
    row; no modular inverse is taken because ``n + 1`` may share factors with
    the row gaps.
    """
    if not rows:
        return _DEFAULT
    n, m = a.n, a.n + 1
    i0 = rows[0]
    v0 = a.perm[i0 - 1]
    for mult in range(1, n + 1):
        b = (v0 - mult * i0) % m
        if all((mult * i + b) % m == a.perm[i - 1] for i in rows):
            return LinearMap(mult, b)
    return None


def fit_segment(a: Arrangement, lo: int, hi: int) -> tuple[LinearMap, LinearMap] | None:
    if not 1 <= lo <= hi <= a.n:
        raise InvalidInput(f"segment [{lo}, {hi}] outside [1, {a.n}]")
    odd = fit_class(a, [i for i in range(lo, hi + 1) if i % 2])
    if odd is None:
        return None
    even = fit_class(a, [i for i in range(lo, hi + 1) if i % 2 == 0])
    if even is None:
        return None
    return odd, even


@lru_cache(maxsize=64)
def _step_masks(n: int) -> tuple[tuple[int, ...], ...]:
    """``masks[g][d]``: bit ``k`` set iff ``k*g == d (mod n+1)``, for ``k`` in [1, n]."""
    m = n + 1
    table = []
    for g in range(m):
        row = [0] * m
        for k in range(1, n + 1):
            row[(k * g) % m] |= 1 << k
        table.append(tuple(row))
    return tuple(table)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def min_width(a: Arrangement) -> tuple[int, QueenFunction]:
    """Minimum width and a witness Queen function that materializes to ``a``.

    Each parity class carries the set of multipliers still consistent with
    its points; a segment is cut when either set empties.  Witness maps use
    the smallest surviving multiplier, matching :func:`fit_segment`.
    """
    a.require_permutation()
    n, m = a.n, a.n + 1
    perm = a.perm
    masks = _step_masks(n)
    full = ((1 << (n + 1)) - 1) & ~1

    segments: list[Segment] = []
    lo = 1
    first: list[tuple[int, int] | None] = [None, None]  # (row, value) per parity (0 even, 1 odd)
    cand = [full, full]

    def close(hi: int) -> None:
        maps = []
        for par in (1, 0):
            pt = first[par]
            if pt is None:
                maps.append(_DEFAULT)
            else:
                k = _lowest(cand[par])
                maps.append(LinearMap(k, (pt[1] - k * pt[0]) % m))
        segments.append(Segment(lo, hi, maps[0], maps[1]))

    for i in range(1, n + 1):
        par = i & 1
        v = perm[i - 1]
        pt = first[par]
        if pt is None:
            first[par] = (i, v)
            continue
        narrowed = cand[par] & masks[(i - pt[0]) % m][(v - pt[1]) % m]
        if narrowed:
            cand[par] = narrowed
            continue
        close(i - 1)
        lo = i
        first = [None, None]
        first[par] = (i, v)
        cand = [full, full]
    close(n)
    return len(segments), QueenFunction(n, tuple(segments))


def orbit_min_width(a: Arrangement) -> int:
    """Smallest width over the 8 rotations/reflections of ``a``."""
    return min(min_width(apply_symmetry(a, s))[0] for s in SymmetryOp)
