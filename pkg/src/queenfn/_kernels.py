"""Compiled inner loops for enumeration and mass width scans.

Solutions are stored as rows of a 2-D ``int16`` array holding 1-indexed
columns.  Every kernel releases the GIL so work units can run on threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_BITS = 62


@njit(cache=True, nogil=True)
def _start_masks(n, prefix):
    cols = 0
    ld = 0
    rd = 0
    for c in prefix:
        bit = 1 << (c - 1)
        cols |= bit
        ld = (ld | bit) << 1
        rd = (rd | bit) >> 1
    return cols, ld, rd


@njit(cache=True, nogil=True)
def _search(n, prefix, out, fill):
    """DFS below ``prefix``; rows are visited column-ascending.

    Returns the number of completions; writes them into ``out`` when ``fill``.
    """
    full = (1 << n) - 1
    k = prefix.shape[0]
    cols, ld, rd = _start_masks(n, prefix)
    if k == n:
        if fill:
            for r in range(n):
                out[0, r] = prefix[r]
        return 1
    depth = n - k
    avail = np.zeros(depth + 1, np.int64)
    c_st = np.zeros(depth + 1, np.int64)
    l_st = np.zeros(depth + 1, np.int64)
    r_st = np.zeros(depth + 1, np.int64)
    row = np.zeros(n, np.int16)
    for r in range(k):
        row[r] = prefix[r]
    c_st[0] = cols
    l_st[0] = ld
    r_st[0] = rd
    avail[0] = full & ~(cols | ld | rd)
    d = 0
    count = 0
    while d >= 0:
        a = avail[d]
        if a == 0:
            d -= 1
            continue
        bit = a & -a
        avail[d] = a ^ bit
        col = 0
        t = bit
        while t > 1:
            t >>= 1
            col += 1
        row[k + d] = col + 1
        if d == depth - 1:
            if fill:
                for r in range(n):
                    out[count, r] = row[r]
            count += 1
            continue
        nc = c_st[d] | bit
        nl = (l_st[d] | bit) << 1
        nr = (r_st[d] | bit) >> 1
        d += 1
        c_st[d] = nc
        l_st[d] = nl
        r_st[d] = nr
        avail[d] = full & ~(nc | nl | nr)
    return count


def count_prefix(n: int, prefix: np.ndarray) -> int:
    return int(_search(n, prefix, np.zeros((1, 1), np.int16), False))


def collect_prefix(n: int, prefix: np.ndarray) -> np.ndarray:
    total = count_prefix(n, prefix)
    out = np.zeros((total, n), np.int16)
    if total:
        _search(n, prefix, out, True)
    return out


def step_masks(n: int) -> np.ndarray:
    """``masks[g, d]`` has bit ``k`` set iff ``k*g == d (mod n+1)``, ``k`` in [1, n]."""
    m = n + 1
    masks = np.zeros((m, m), np.int64)
    for g in range(m):
        for k in range(1, n + 1):
            masks[g, (k * g) % m] |= 1 << k
    return masks


@njit(cache=True, nogil=True)
def _greedy_width(p, n, masks):
    m = n + 1
    full = ((1 << (n + 1)) - 1) & ~1
    width = 1
    fi = np.zeros(2, np.int64)
    fv = np.zeros(2, np.int64)
    has = np.zeros(2, np.bool_)
    cand = np.empty(2, np.int64)
    cand[0] = full
    cand[1] = full
    for i in range(1, n + 1):
        par = i & 1
        v = p[i - 1]
        if not has[par]:
            has[par] = True
            fi[par] = i
            fv[par] = v
            continue
        nar = cand[par] & masks[(i - fi[par]) % m, (v - fv[par]) % m]
        if nar != 0:
            cand[par] = nar
            continue
        width += 1
        has[0] = False
        has[1] = False
        cand[0] = full
        cand[1] = full
        has[par] = True
        fi[par] = i
        fv[par] = v
    return width


@njit(cache=True, nogil=True)
def _widths(sols, n, masks):
    out = np.empty(sols.shape[0], np.int64)
    for s in range(sols.shape[0]):
        out[s] = _greedy_width(sols[s], n, masks)
    return out


def widths(sols: np.ndarray, n: int) -> np.ndarray:
    if n > MAX_BITS:
        raise ValueError(f"width kernel supports n <= {MAX_BITS}")
    return _widths(sols, n, step_masks(n))


@njit(cache=True, nogil=True)
def _images(p, n, img):
    """Fill ``img[0..7]`` with the symmetry images in SymmetryOp order."""
    for i in range(n):
        img[0, i] = p[i]
    for k in range(1, 4):
        prev = img[k - 1]
        for i in range(n):
            # rot90: new[c] = n + 1 - (row holding column c)
            img[k, prev[i] - 1] = n - i
    for k in range(4):
        for i in range(n):
            img[4 + k, i] = n + 1 - img[k, i]


@njit(cache=True, nogil=True)
def _less(x, y, n):
    for i in range(n):
        if x[i] != y[i]:
            return x[i] < y[i]
    return False


@njit(cache=True, nogil=True)
def _same(x, y, n):
    for i in range(n):
        if x[i] != y[i]:
            return False
    return True


@njit(cache=True, nogil=True)
def _orbit_info(sols, n, masks, with_width):
    """Per row: canonical flag, orbit size, and (optionally) min width over the orbit."""
    rows = sols.shape[0]
    canon = np.zeros(rows, np.bool_)
    size = np.zeros(rows, np.int64)
    owidth = np.zeros(rows, np.int64)
    img = np.zeros((8, n), np.int16)
    for s in range(rows):
        _images(sols[s], n, img)
        is_min = True
        distinct = 0
        for k in range(8):
            if _less(img[k], img[0], n):
                is_min = False
            dup = False
            for j in range(k):
                if _same(img[j], img[k], n):
                    dup = True
                    break
            if not dup:
                distinct += 1
        canon[s] = is_min
        size[s] = distinct
        if with_width and is_min:
            best = n
            for k in range(8):
                w = _greedy_width(img[k], n, masks)
                if w < best:
                    best = w
            owidth[s] = best
    return canon, size, owidth


def orbit_info(sols: np.ndarray, n: int, with_width: bool = False):
    return _orbit_info(sols, n, step_masks(n), with_width)
