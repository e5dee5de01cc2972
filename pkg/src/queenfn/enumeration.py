"""Exhaustive enumeration, counting and fundamental classes at desk scale.

Work is split into units, one per non-attacking placement of the first
``k`` rows.  Units are independent; results are merged in prefix order, so
output never depends on ``jobs``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from queenfn import _kernels
from queenfn.compose import conjecture_applicable
from queenfn.core import Arrangement
from queenfn.errors import AttackingPrefix, InvalidInput, LimitExceeded

__all__ = [
    "CEILING",
    "CONJECTURE_CEILING",
    "SearchState",
    "FundamentalClass",
    "unit_prefixes",
    "iter_blocks",
    "enumerate_solutions",
    "count_solutions",
    "count_with_prefix",
    "fundamental_classes",
    "RemarkReport",
    "check_remark_15",
    "ConjectureReport",
    "check_conjecture",
]

CEILING = 17
CONJECTURE_CEILING = 14


@dataclass
class SearchState:
    """Occupancy after placing rows ``1..row``.

    ``diag_up`` bit ``c - r + n - 1`` and ``diag_down`` bit ``c + r - 2`` mark
    the 2n-1 difference and sum diagonals (rows and columns 1-indexed).
    """

    n: int
    row: int = 0
    cols: int = 0
    diag_up: int = 0
    diag_down: int = 0

    def free(self, c: int) -> bool:
        r = self.row + 1
        return not (
            self.cols >> (c - 1) & 1 or self.diag_up >> (c - r + self.n - 1) & 1 or self.diag_down >> (c + r - 2) & 1
        )

    def place(self, c: int) -> SearchState:
        if not 1 <= c <= self.n or self.row >= self.n:
            raise InvalidInput(f"cannot place column {c} in row {self.row + 1} of an {self.n}-board")
        if not self.free(c):
            raise AttackingPrefix(f"queen ({self.row + 1}, {c}) is attacked")
        r = self.row + 1
        return SearchState(
            self.n,
            r,
            self.cols | 1 << (c - 1),
            self.diag_up | 1 << (c - r + self.n - 1),
            self.diag_down | 1 << (c + r - 2),
        )

    @classmethod
    def from_prefix(cls, n: int, prefix: Sequence[int]) -> SearchState:
        state = cls(n)
        for c in prefix:
            state = state.place(c)
        return state


@dataclass(frozen=True)
class FundamentalClass:
    representative: Arrangement
    orbit_size: int

    def to_json(self) -> dict:
        return {"rep": list(self.representative.perm), "orbit": self.orbit_size}


def _check_n(n: int, limit: int = CEILING) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"board size must be a positive integer, got {n!r}")
    if n > limit:
        raise LimitExceeded(f"n = {n} exceeds the enumeration ceiling {limit}")


def _unit_depth(n: int) -> int:
    return 1 if n < 14 else 2


def unit_prefixes(n: int, prefix: Sequence[int] = (), depth: int | None = None) -> list[tuple[int, ...]]:
    """Non-attacking extensions of ``prefix`` to ``depth`` rows, lexicographic."""
    base = SearchState.from_prefix(n, prefix)
    depth = min(n, max(len(prefix), _unit_depth(n) if depth is None else depth))
    units = [(tuple(prefix), base)]
    for _ in range(depth - len(prefix)):
        units = [(p + (c,), s.place(c)) for p, s in units for c in range(1, n + 1) if s.free(c)]
    return [p for p, _ in units]


def _map_units(fn: Callable, units: list, jobs: int) -> Iterator:
    if jobs <= 1 or len(units) <= 1:
        yield from map(fn, units)
        return
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for i in range(0, len(units), jobs):
            yield from pool.map(fn, units[i : i + jobs])


def iter_blocks(n: int, prefix: Sequence[int] = (), jobs: int = 1) -> Iterator[np.ndarray]:
    """Solutions extending ``prefix`` as ``int16`` row blocks, in lexicographic order."""
    _check_n(n)
    units = unit_prefixes(n, prefix)
    yield from _map_units(lambda p: _kernels.collect_prefix(n, np.array(p, np.int64)), units, jobs)


def enumerate_solutions(
    n: int,
    visitor: Callable[[Arrangement], object] | None = None,
    prefix: Sequence[int] = (),
    jobs: int = 1,
) -> int:
    """Call ``visitor`` once per solution (lexicographic order) and return the count."""
    total = 0
    for block in iter_blocks(n, prefix, jobs):
        total += len(block)
        if visitor is not None:
            for row in block.tolist():
                visitor(Arrangement(n, tuple(row)))
    return total


def count_with_prefix(n: int, prefix: Sequence[int]) -> int:
    _check_n(n)
    SearchState.from_prefix(n, prefix)
    return _kernels.count_prefix(n, np.array(prefix, np.int64))


def count_solutions(n: int, jobs: int = 1, prefix: Sequence[int] = ()) -> int:
    _check_n(n)
    units = unit_prefixes(n, prefix)
    return sum(_map_units(lambda p: _kernels.count_prefix(n, np.array(p, np.int64)), units, jobs))


def fundamental_classes(n: int, jobs: int = 1) -> list[FundamentalClass]:
    _check_n(n)
    classes = []
    for block in iter_blocks(n, jobs=jobs):
        canon, size, _ = _kernels.orbit_info(block, n)
        for row, k in zip(block[canon].tolist(), size[canon].tolist()):
            classes.append(FundamentalClass(Arrangement(n, tuple(row)), int(k)))
    classes.sort(key=lambda c: c.representative.perm)
    return classes


@dataclass(frozen=True)
class RemarkReport:
    n: int
    visited: int
    partition_total: int
    histogram: dict[int, int]
    min_width: int
    passes: bool
    examples: tuple[Arrangement, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "visited": self.visited,
            "partition_total": self.partition_total,
            "width_histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "min_width": self.min_width,
            "passes": self.passes,
            "min_width_examples": [list(a.perm) for a in self.examples],
        }


def width_histogram(n: int, jobs: int = 1, keep: int = 0) -> tuple[Counter[int], int, list[Arrangement]]:
    """Per-solution minimum widths over every ``n``-solution.

    Returns the histogram, the number visited, and up to ``keep`` solutions of
    the smallest width seen.
    """
    hist: Counter[int] = Counter()
    visited = 0
    best = n + 1
    examples: list[Arrangement] = []
    for block in iter_blocks(n, jobs=jobs):
        if not len(block):
            continue
        w = _kernels.widths(block, n)
        visited += len(block)
        hist.update(Counter(w.tolist()))
        lo = int(w.min())
        if lo < best:
            best, examples = lo, []
        if lo == best and len(examples) < keep:
            for row in block[w == lo][: keep - len(examples)].tolist():
                examples.append(Arrangement(n, tuple(row)))
    return hist, visited, examples


def check_remark_15(jobs: int = 1, n: int = 15) -> RemarkReport:
    """Minimum Queen-function width over all 15-queens solutions; passes iff it is 3."""
    hist, visited, examples = width_histogram(n, jobs, keep=8)
    partition_total = sum(count_with_prefix(n, p) for p in unit_prefixes(n, depth=1))
    lo = min(hist) if hist else 0
    return RemarkReport(n, visited, partition_total, dict(hist), lo, lo == 3 and visited == partition_total, tuple(examples))


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    applicable: bool
    classes: int
    histogram: dict[int, int]
    worst: FundamentalClass | None
    worst_width: int
    failing: int
    passes: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "applicable": self.applicable,
            "classes": self.classes,
            "orbit_width_histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "worst_class": self.worst.to_json() if self.worst else None,
            "worst_width": self.worst_width,
            "failing_classes": self.failing,
            "passes": self.passes,
        }


def check_conjecture(n: int, jobs: int = 1, limit: int = CONJECTURE_CEILING, bound: int = 4) -> ConjectureReport:
    """Does every fundamental class of ``n`` contain a member of width <= ``bound``?"""
    _check_n(n, limit)
    applicable = n == 1 or conjecture_applicable(n)
    if not applicable:
        return ConjectureReport(n, False, 0, {}, None, 0, 0, None)
    hist: Counter[int] = Counter()
    worst: FundamentalClass | None = None
    worst_width = 0
    for block in iter_blocks(n, jobs=jobs):
        canon, size, owidth = _kernels.orbit_info(block, n, True)
        for row, k, w in zip(block[canon].tolist(), size[canon].tolist(), owidth[canon].tolist()):
            hist[w] += 1
            if w > worst_width:
                worst_width = w
                worst = FundamentalClass(Arrangement(n, tuple(row)), int(k))
    failing = sum(v for w, v in hist.items() if w > bound)
    return ConjectureReport(n, True, sum(hist.values()), dict(hist), worst, worst_width, failing, failing == 0)
