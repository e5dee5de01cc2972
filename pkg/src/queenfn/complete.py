"""Completing partial queen placements to full solutions.

:func:`complete` is exact: it returns ``None`` only when no completion
exists.  :func:`complete_via_queen_functions` only looks at Queen functions
of bounded width, so its ``None`` means "none found under the bound".
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

from queenfn.core import Arrangement, validate
from queenfn.errors import InvalidInput, LimitExceeded

__all__ = ["PartialPlacement", "complete", "complete_via_queen_functions", "QF_MAX_N"]

QF_MAX_N = 64


@dataclass(frozen=True)
class PartialPlacement:
    n: int
    queens: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"board size must be a positive integer, got {self.n!r}")
        queens = frozenset((int(r), int(c)) for r, c in self.queens)
        object.__setattr__(self, "queens", queens)
        for r, c in queens:
            if not (1 <= r <= self.n and 1 <= c <= self.n):
                raise InvalidInput(f"queen ({r}, {c}) is off the {self.n}x{self.n} board")
        if len({r for r, _ in queens}) != len(queens) or len({c for _, c in queens}) != len(queens):
            raise InvalidInput("two queens share a row or a column")

    @classmethod
    def parse(cls, n: int, text: str) -> PartialPlacement:
        """Read ``"r,c;r,c;..."``; an empty string is the empty board."""
        pairs = []
        for chunk in filter(None, (s.strip() for s in text.split(";"))):
            try:
                r, c = (int(x) for x in chunk.split(","))
            except ValueError:
                raise InvalidInput(f"bad queen {chunk!r}; expected 'row,col'") from None
            pairs.append((r, c))
        return cls(n, frozenset(pairs))

    @classmethod
    def of(cls, n: int, queens: Iterable[tuple[int, int]]) -> PartialPlacement:
        return cls(n, frozenset(queens))

    def attacking(self) -> bool:
        diffs = {c - r for r, c in self.queens}
        sums = {c + r for r, c in self.queens}
        return len(diffs) != len(self.queens) or len(sums) != len(self.queens)

    def to_text(self) -> str:
        return ";".join(f"{r},{c}" for r, c in sorted(self.queens))


def complete(p: PartialPlacement) -> Arrangement | None:
    """Exact completion by backtracking.

    Branches on the free row with the fewest open columns (lowest row on
    ties), trying columns in ascending order.
    """
    n = p.n
    if p.attacking():
        return None
    board = [0] * (n + 1)
    cols = diff = summ = 0
    for r, c in p.queens:
        board[r] = c
        cols |= 1 << c
        diff |= 1 << (c - r + n)
        summ |= 1 << (c + r)
    free_rows = [r for r in range(1, n + 1) if not board[r]]

    def options(r: int) -> list[int]:
        return [c for c in range(1, n + 1) if not (cols >> c & 1 or diff >> (c - r + n) & 1 or summ >> (c + r) & 1)]

    def rec() -> bool:
        nonlocal cols, diff, summ
        if not free_rows:
            return True
        best_row, best = 0, None
        for r in free_rows:
            opts = options(r)
            if best is None or len(opts) < len(best):
                best_row, best = r, opts
                if not opts:
                    return False
        free_rows.remove(best_row)
        for c in best or ():
            board[best_row] = c
            cols ^= 1 << c
            diff ^= 1 << (c - best_row + n)
            summ ^= 1 << (c + best_row)
            if rec():
                return True
            cols ^= 1 << c
            diff ^= 1 << (c - best_row + n)
            summ ^= 1 << (c + best_row)
        board[best_row] = 0
        free_rows.append(best_row)
        free_rows.sort()
        return False

    if not rec():
        return None
    return Arrangement(n, tuple(board[1:]))


def _partitions(n: int, width: int) -> Iterator[list[tuple[int, int]]]:
    for cuts in combinations(range(2, n + 1), width - 1):
        bounds = (1, *cuts, n + 1)
        yield [(bounds[k], bounds[k + 1] - 1) for k in range(width)]


def _class_candidates(n: int, rows: list[int], fixed: dict[int, int]) -> list[tuple[int, ...]]:
    """Distinct value tuples some ``a*i + b (mod n+1)`` gives on ``rows``.

    A placed queen in the class pins ``b`` for each ``a``; tuples containing 0
    or disagreeing with another placed queen are dropped.
    """
    m = n + 1
    pinned = [(i, fixed[i]) for i in rows if i in fixed]
    seen: dict[tuple[int, ...], None] = {}
    for a in range(1, n + 1):
        if pinned:
            i0, v0 = pinned[0]
            offsets: Iterable[int] = ((v0 - a * i0) % m,)
        else:
            offsets = range(m)
        for b in offsets:
            vals = tuple((a * i + b) % m for i in rows)
            if 0 in vals or any(vals[rows.index(i)] != v for i, v in pinned):
                continue
            seen.setdefault(vals)
    return list(seen)


def complete_via_queen_functions(p: PartialPlacement, max_width: int = 4) -> Arrangement | None:
    """Search Queen functions of width <= ``max_width`` that agree with ``p``.

    Widths are tried in increasing order, cut points lexicographically, and
    within a partition each parity class of each segment in turn, pruning as
    soon as a class clashes with queens already fixed.  Incomplete by design.
    """
    n = p.n
    if max_width < 1:
        raise InvalidInput(f"max_width must be positive, got {max_width}")
    if n > QF_MAX_N:
        raise LimitExceeded(f"Queen-function completion supports n <= {QF_MAX_N}")
    if p.attacking():
        return None
    fixed = {r: c for r, c in p.queens}

    for width in range(1, min(max_width, n) + 1):
        for parts in _partitions(n, width):
            classes = []
            for lo, hi in parts:
                for start in (lo | 1, lo + (lo & 1)):
                    rows = list(range(start, hi + 1, 2))
                    if rows:
                        classes.append(rows)
            # most-pinned classes first so placed queens prune early
            classes.sort(key=lambda rows: -sum(i in fixed for i in rows))
            found = _fill(n, classes, fixed)
            if found is not None:
                result = Arrangement(n, tuple(found[1:]))
                if validate(result):
                    return result
    return None


def _fill(n: int, classes: list[list[int]], fixed: dict[int, int]) -> list[int] | None:
    board = [0] * (n + 1)
    cols = diff = summ = 0
    for r, c in fixed.items():
        board[r] = c
        cols |= 1 << c
        diff |= 1 << (c - r + n)
        summ |= 1 << (c + r)
    cands = []
    for rows in classes:
        free = [i for i in rows if i not in fixed]
        opts = []
        for vals in _class_candidates(n, rows, fixed):
            placed = {i: v for i, v in zip(rows, vals) if i not in fixed}
            cm = dm = sm = 0
            for i, v in placed.items():
                cm |= 1 << v
                dm |= 1 << (v - i + n)
                sm |= 1 << (v + i)
            # drop tuples that attack themselves
            if cm.bit_count() == dm.bit_count() == sm.bit_count() == len(free):
                opts.append((placed, cm, dm, sm))
        cands.append(opts)

    def rec(k: int) -> bool:
        nonlocal cols, diff, summ
        if k == len(classes):
            return True
        for placed, cm, dm, sm in cands[k]:
            if cols & cm or diff & dm or summ & sm:
                continue
            cols |= cm
            diff |= dm
            summ |= sm
            for i, v in placed.items():
                board[i] = v
            if rec(k + 1):
                return True
            cols ^= cm
            diff ^= dm
            summ ^= sm
        return False

    return board if rec(0) else None
