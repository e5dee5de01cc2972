"""O(n) construction of one solution per board size.

Each residue class of ``n`` gets a fixed piecewise doubling map modulo
``n + 1`` of width 1, 2 or 3.  Half-board comparisons use doubled integers
so no fractional ``n/2`` ever appears.
"""

from __future__ import annotations

import enum

from queenfn.core import Arrangement, LinearMap, QueenFunction, Segment, materialize
from queenfn.errors import InvalidInput, NoSolutionExists

__all__ = ["LemmaFamily", "dispatch", "build_queen_function", "solve"]


class LemmaFamily(enum.Enum):
    L1_12K_MINUS_4 = ("L1_12k_minus_4", 2)
    L2_6K_OR_6K4 = ("L2_6k_or_6k4", 1)
    L3_6K1_OR_6K5 = ("L3_6k1_or_6k5", 2)
    L4_12K_PLUS_2 = ("L4_12k_plus_2", 3)
    L5_6K3 = ("L5_6k3", 3)

    @property
    def tag(self) -> str:
        return self.value[0]

    @property
    def claimed_width(self) -> int:
        return self.value[1]


def _check_size(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidInput(f"board size must be a positive integer, got {n!r}")
    if n in (2, 3):
        raise NoSolutionExists(f"no {n}x{n} solution exists")
    if n == 1:
        raise InvalidInput("n = 1 has no Queen-function family; use solve(1)")


def dispatch(n: int) -> LemmaFamily:
    _check_size(n)
    r6 = n % 6
    if r6 in (0, 4):
        return LemmaFamily.L2_6K_OR_6K4
    if r6 in (1, 5):
        return LemmaFamily.L3_6K1_OR_6K5
    if r6 == 3:
        return LemmaFamily.L5_6K3
    return LemmaFamily.L4_12K_PLUS_2 if n % 12 == 2 else LemmaFamily.L1_12K_MINUS_4


def _seg(lo: int, hi: int, a: int, b: int, a_even: int | None = None, b_even: int | None = None) -> Segment:
    odd = LinearMap(a, b)
    even = odd if a_even is None else LinearMap(a_even, b_even)  # type: ignore[arg-type]
    return Segment(lo, hi, odd, even)


def build_queen_function(n: int) -> QueenFunction:
    family = dispatch(n)
    if family is LemmaFamily.L2_6K_OR_6K4:
        segs = [_seg(1, n, 2, 0)]
    elif family is LemmaFamily.L3_6K1_OR_6K5:
        # n odd: rows 2i < n then 2i > n
        segs = [_seg(1, n // 2, 2, 0), _seg(n // 2 + 1, n, 2, 1)]
    elif family is LemmaFamily.L1_12K_MINUS_4:
        # odd rows past the middle: 2i+2; even rows: 2i-2, stored as b = n-1
        segs = [_seg(1, n // 2, 2, 0), _seg(n // 2 + 1, n, 2, 2, 2, n - 1)]
    elif family is LemmaFamily.L4_12K_PLUS_2:
        h = n // 2
        segs = [_seg(1, h - 1, 2, 4, 2, 0), _seg(h, n - 1, 2, 2), _seg(n, n, 2, 4)]
    else:
        m = (n - 1) // 2
        segs = [_seg(1, m - 1, 2, 2), _seg(m, m, 2, 4), _seg(m + 1, n, 2, 5)]
    return QueenFunction(n, tuple(segs))


def solve(n: int) -> Arrangement:
    """A valid ``n``-queens solution in O(n) time, for n = 1 or n >= 4."""
    if n == 1:
        return Arrangement(1, (1,))
    return materialize(build_queen_function(n))
