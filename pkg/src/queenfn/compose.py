"""Composition of solutions and the residue criterion that governs it.

``compose(A, B)`` blows every queen of ``B`` up into a copy of ``A``.  For
solutions with ``|A| >= 2`` the result is a solution exactly when the
differences ``B(i) - i`` and the sums ``B(i) + i`` each run over every
residue modulo ``|B|``.  With ``A = [1]`` the result is ``B`` itself, so only
the sufficient direction survives.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from queenfn.core import Arrangement, as_arrangement
from queenfn.errors import InvalidInput, NoWitness, SizeMismatch

__all__ = [
    "CriterionReport",
    "criterion",
    "compose",
    "generalized_compose",
    "hedayat_exists",
    "witness",
    "ModularSearchResult",
    "modular_search",
    "IrreducibleForm",
    "Verdict",
    "IrreducibilityClass",
    "factorize",
    "classify",
    "conjecture_applicable",
]


@dataclass(frozen=True)
class CriterionReport:
    n: int
    diff_residues: tuple[int, ...]
    sum_residues: tuple[int, ...]
    diff_complete: bool
    sum_complete: bool

    @property
    def passes(self) -> bool:
        return self.diff_complete and self.sum_complete

    def missing(self) -> tuple[list[int], list[int]]:
        full = set(range(self.n))
        return sorted(full - set(self.diff_residues)), sorted(full - set(self.sum_residues))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "diff_residues": list(self.diff_residues),
            "sum_residues": list(self.sum_residues),
            "diff_complete": self.diff_complete,
            "sum_complete": self.sum_complete,
            "passes": self.passes,
        }


def criterion(b: Arrangement | Sequence[int]) -> CriterionReport:
    b = as_arrangement(b)
    b.require_permutation()
    n = b.n
    diffs = tuple((v - i) % n for i, v in enumerate(b.perm, start=1))
    sums = tuple((v + i) % n for i, v in enumerate(b.perm, start=1))
    return CriterionReport(n, diffs, sums, len(set(diffs)) == n, len(set(sums)) == n)


def generalized_compose(parts: Sequence[Arrangement], b: Arrangement) -> Arrangement:
    """``C(|B|(i-1) + j) = |B|(A_j(i) - 1) + B(j)`` with one ``A_j`` per row of ``B``."""
    b = as_arrangement(b)
    parts = [as_arrangement(p) for p in parts]
    if len(parts) != b.n:
        raise SizeMismatch(f"need {b.n} inner arrangements, got {len(parts)}")
    sizes = {p.n for p in parts}
    if len(sizes) != 1:
        raise SizeMismatch(f"inner arrangements differ in size: {sorted(sizes)}")
    b.require_permutation()
    for p in parts:
        p.require_permutation()
    nb = b.n
    na = parts[0].n
    out = [0] * (na * nb)
    for j, bj in enumerate(b.perm, start=1):
        aj = parts[j - 1].perm
        for i in range(1, na + 1):
            out[nb * (i - 1) + j - 1] = nb * (aj[i - 1] - 1) + bj
    return Arrangement(na * nb, tuple(out))


def compose(a: Arrangement | Sequence[int], b: Arrangement | Sequence[int]) -> Arrangement:
    b = as_arrangement(b)
    return generalized_compose([as_arrangement(a)] * b.n, b)


def hedayat_exists(n: int) -> bool:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    return math.gcd(n, 6) == 1


def witness(n: int) -> Arrangement:
    """``B(i) = 2i mod n`` (0 read as n); passes the criterion when gcd(n, 6) = 1."""
    if not hedayat_exists(n):
        raise NoWitness(f"gcd({n}, 6) != 1: no permutation has complete difference and sum residues")
    b = Arrangement(n, tuple((2 * i) % n or n for i in range(1, n + 1)))
    if not criterion(b).passes:  # pragma: no cover - excluded by gcd(1,n) = gcd(3,n) = 1
        raise AssertionError(f"doubling map failed the criterion for n={n}")
    return b


@dataclass(frozen=True)
class ModularSearchResult:
    n: int
    found: Arrangement | None
    nodes: int


def modular_search(n: int, moment_pruning: bool = True) -> ModularSearchResult:
    """Exhaustive search for a permutation with complete ±residues modulo ``n``.

    Exact cover over rows, columns, difference residues and sum residues,
    each used exactly once; the item with fewest candidate cells is branched
    on first.  Row 1 is pinned to column 1: shifting every column by a
    constant maps solutions to solutions.

    With ``moment_pruning`` a node is cut when the unused items violate
        sum(cols) - sum(rows) == sum(diffs)   and   sum(cols) + sum(rows) == sum(sums)
        2*sum(cols^2) + 2*sum(rows^2) == sum(diffs^2) + sum(sums^2)
    modulo ``n``.  Every completion satisfies these, so the search stays
    exhaustive.  Without it the search is a plain MRV backtrack.
    """
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    rows_free = set(range(1, n))
    cols_free = set(range(1, n))
    # the pinned queen (0, 0) uses difference 0 and sum 0
    diff_free = set(range(1, n))
    sum_free = set(range(1, n))
    assign = {0: 0}
    nodes = 0

    def moments_ok() -> bool:
        sc, sr = sum(cols_free), sum(rows_free)
        if (sc - sr - sum(diff_free)) % n or (sc + sr - sum(sum_free)) % n:
            return False
        q = 2 * sum(c * c for c in cols_free) + 2 * sum(r * r for r in rows_free)
        return (q - sum(d * d for d in diff_free) - sum(s * s for s in sum_free)) % n == 0

    def cells() -> list[tuple[int, int]]:
        # candidate cells of the most constrained item
        best: list[tuple[int, int]] | None = None
        families = (
            [[(r, c) for c in cols_free if (c - r) % n in diff_free and (c + r) % n in sum_free] for r in sorted(rows_free)],
            [[(r, c) for r in rows_free if (c - r) % n in diff_free and (c + r) % n in sum_free] for c in sorted(cols_free)],
            [[(r, (r + d) % n) for r in rows_free if (r + d) % n in cols_free and (2 * r + d) % n in sum_free] for d in sorted(diff_free)],
            [[(r, (s - r) % n) for r in rows_free if (s - r) % n in cols_free and (s - 2 * r) % n in diff_free] for s in sorted(sum_free)],
        )
        for family in families:
            for option in family:
                if best is None or len(option) < len(best):
                    best = option
                    if not best:
                        return best
        return sorted(best or [])

    def place(r: int, c: int, on: bool) -> None:
        d, s = (c - r) % n, (c + r) % n
        if on:
            rows_free.remove(r); cols_free.remove(c); diff_free.remove(d); sum_free.remove(s)  # noqa: E702
            assign[r] = c
        else:
            rows_free.add(r); cols_free.add(c); diff_free.add(d); sum_free.add(s)  # noqa: E702
            del assign[r]

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if not rows_free:
            return True
        if moment_pruning and not moments_ok():
            return False
        for r, c in cells():
            place(r, c, True)
            if rec():
                return True
            place(r, c, False)
        return False

    if n == 1 or rec():
        perm = tuple(assign[r] + 1 for r in range(n))
        return ModularSearchResult(n, Arrangement(n, perm), max(nodes, 1))
    return ModularSearchResult(n, None, nodes)


class Verdict(enum.Enum):
    Q_IRREDUCIBLE = "QIrreducible"
    REDUCIBLE = "Reducible"


class IrreducibleForm(enum.Enum):
    PRIME = "p"
    DOUBLE_PRIME = "2p"
    TRIPLE_PRIME = "3p"
    SMOOTH = "2^k3^l"


@dataclass(frozen=True)
class IrreducibilityClass:
    n: int
    verdict: Verdict
    witness: tuple[int, int] | None = None
    form: IrreducibleForm | None = None

    @property
    def irreducible(self) -> bool:
        return self.verdict is Verdict.Q_IRREDUCIBLE

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "verdict": self.verdict.value,
            "form": self.form.value if self.form else None,
            "witness": list(self.witness) if self.witness else None,
        }


def factorize(n: int) -> Counter[int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    out: Counter[int] = Counter()
    for p in (2, 3):
        while n % p == 0:
            out[p] += 1
            n //= p
    d = 5
    while d * d <= n:
        for q in (d, d + 2):
            while n % q == 0:
                out[q] += 1
                n //= q
        d += 6
    if n > 1:
        out[n] += 1
    return out


def _divisors(factors: Counter[int]) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def classify(n: int) -> IrreducibilityClass:
    """Decide Q-irreducibility of ``n`` from its factorization.

    ``n = 2^k 3^l s`` with ``gcd(s, 6) = 1``.  ``n`` is a composition of
    smaller boards iff some divisor ``b >= 5`` coprime to 6 leaves a cofactor
    ``n / b >= 4`` (no 2x2 or 3x3 solution exists to compose).
    """
    factors = factorize(n)
    smooth = 2 ** factors[2] * 3 ** factors[3]
    rest = n // smooth
    if rest == 1:
        return IrreducibilityClass(n, Verdict.Q_IRREDUCIBLE, form=IrreducibleForm.SMOOTH)
    if sum(e for p, e in factors.items() if p > 3) == 1 and smooth <= 3:
        form = {1: IrreducibleForm.PRIME, 2: IrreducibleForm.DOUBLE_PRIME, 3: IrreducibleForm.TRIPLE_PRIME}[smooth]
        return IrreducibilityClass(n, Verdict.Q_IRREDUCIBLE, form=form)
    rest_factors = Counter({p: e for p, e in factors.items() if p > 3})
    for b in _divisors(rest_factors):
        if b >= 5 and n // b >= 4:
            return IrreducibilityClass(n, Verdict.REDUCIBLE, witness=(n // b, b))
    raise AssertionError(f"no composition split found for reducible n={n}")  # pragma: no cover


def conjecture_applicable(n: int) -> bool:
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    return classify(n).irreducible and classify(n - 1).irreducible
