"""Independent reference implementations used only by the tests.

Nothing here imports the code paths it checks.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


def pairwise_solution(perm) -> bool:
    """Direct pairwise test: distinct columns and |i-j| != |p(i)-p(j)|."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        return False
    return all(abs(i - j) != abs(perm[i] - perm[j]) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def naive_solutions(n: int) -> tuple[tuple[int, ...], ...]:
    """Filter all n! permutations."""
    return tuple(p for p in itertools.permutations(range(1, n + 1)) if pairwise_solution(p))


def to_matrix(perm) -> np.ndarray:
    n = len(perm)
    m = np.zeros((n, n), dtype=np.int8)
    for r, c in enumerate(perm):
        m[r, c - 1] = 1
    return m


def from_matrix(m: np.ndarray) -> tuple[int, ...]:
    return tuple(int(np.flatnonzero(row)[0]) + 1 for row in m)


def matrix_images(perm) -> set[tuple[int, ...]]:
    """All dihedral images computed on the 0/1 board matrix with numpy."""
    m = to_matrix(perm)
    out = set()
    for k in range(4):
        r = np.rot90(m, k)
        out.add(from_matrix(r))
        out.add(from_matrix(np.fliplr(r)))
    return out


def brute_fit(points, n: int) -> bool:
    """Is there any (a, b) in [1,n] x [0,n] with a*i + b == v (mod n+1) on every point?"""
    m = n + 1
    return any(all((a * i + b) % m == v for i, v in points) for a in range(1, n + 1) for b in range(0, n + 1))


def segment_feasible(perm, lo: int, hi: int) -> bool:
    n = len(perm)
    odd = [(i, perm[i - 1]) for i in range(lo, hi + 1) if i % 2]
    even = [(i, perm[i - 1]) for i in range(lo, hi + 1) if i % 2 == 0]
    return (not odd or brute_fit(odd, n)) and (not even or brute_fit(even, n))


def dp_width(perm) -> int:
    """Exact minimum interval partition into feasible segments (O(n^2) feasibility calls)."""
    n = len(perm)
    best = [0] + [n + 1] * n
    for hi in range(1, n + 1):
        for lo in range(1, hi + 1):
            if best[lo - 1] + 1 < best[hi] and segment_feasible(perm, lo, hi):
                best[hi] = best[lo - 1] + 1
    return best[n]


def residues_complete(perm) -> bool:
    n = len(perm)
    d = {(v - i) % n for i, v in enumerate(perm, start=1)}
    s = {(v + i) % n for i, v in enumerate(perm, start=1)}
    return len(d) == n and len(s) == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def reducible_by_definition(limit: int) -> np.ndarray:
    """``red[N]``: some divisor b >= 5 with gcd(b, 6) = 1 leaves a cofactor >= 4.

    A factor b admits a complete-residue permutation iff gcd(b, 6) = 1, and the
    cofactor needs an ordinary solution, which exists for 1 and sizes >= 4;
    cofactor 1 is not a smaller board.
    """
    red = np.zeros(limit + 1, dtype=bool)
    for b in range(5, limit // 4 + 1):
        if b % 2 and b % 3:
            red[4 * b :: b] = True
    return red


def closed_form_irreducible(limit: int) -> np.ndarray:
    """``irr[N]`` for N in {p, 2p, 3p, 2^k 3^l} via a sieve."""
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    irr = np.zeros(limit + 1, dtype=bool)
    primes = np.flatnonzero(sieve)
    for k in (1, 2, 3):
        q = primes * k
        irr[q[q <= limit]] = True
    p2 = 1
    while p2 <= limit:
        p3 = p2
        while p3 <= limit:
            irr[p3] = True
            p3 *= 3
        p2 *= 2
    irr[0] = False
    return irr
