"""Arrangements, Queen functions, the solution test, and board symmetries.

Everything is 1-indexed: ``perm[i - 1]`` is the column of the queen in row
``i``.  A Queen function evaluates ``a*i + b (mod n+1)`` on each parity class
of each segment of a partition of ``[1, n]``.
"""

from __future__ import annotations

import bisect
import enum
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Any

from queenfn.errors import InvalidInput, NotAPermutation, ValueOutOfRange

__all__ = [
    "Arrangement",
    "LinearMap",
    "Segment",
    "QueenFunction",
    "SymmetryOp",
    "as_arrangement",
    "validate",
    "eval_queen_function",
    "materialize",
    "apply_symmetry",
    "orbit",
    "canonical_form",
]


@dataclass(frozen=True)
class Arrangement:
    """One queen per row: ``perm[i-1]`` is the column used by row ``i``.

    Construction checks length and range only; whether ``perm`` is a
    permutation is reported by :attr:`is_permutation` and checked by the
    operations that need it.
    """

    n: int
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"board size must be a positive integer, got {self.n!r}")
        perm = tuple(self.perm)
        object.__setattr__(self, "perm", perm)
        if len(perm) != self.n:
            raise InvalidInput(f"expected {self.n} entries, got {len(perm)}")
        for v in perm:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= self.n:
                raise InvalidInput(f"entry {v!r} outside [1, {self.n}]")

    @classmethod
    def of(cls, perm: Iterable[int]) -> Arrangement:
        p = tuple(perm)
        return cls(len(p), p)

    @property
    def is_permutation(self) -> bool:
        return len(set(self.perm)) == self.n

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        """Column of the queen in row ``i`` (1-indexed)."""
        if not 1 <= i <= self.n:
            raise InvalidInput(f"row {i} outside [1, {self.n}]")
        return self.perm[i - 1]

    def inverse(self) -> Arrangement:
        self.require_permutation()
        inv = [0] * self.n
        for i, v in enumerate(self.perm, start=1):
            inv[v - 1] = i
        return Arrangement(self.n, tuple(inv))

    def require_permutation(self) -> None:
        if not self.is_permutation:
            raise InvalidInput(f"{list(self.perm)} is not a permutation of 1..{self.n}")

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "perm": list(self.perm)}

    @classmethod
    def from_json(cls, obj: Any) -> Arrangement:
        if not isinstance(obj, dict) or "n" not in obj or "perm" not in obj:
            raise InvalidInput('arrangement JSON needs fields "n" and "perm"')
        return cls(obj["n"], tuple(obj["perm"]))

    def to_text(self) -> str:
        return " ".join(map(str, self.perm))

    @classmethod
    def parse(cls, text: str) -> Arrangement:
        """Read either the one-line text format or the JSON object format."""
        text = text.strip()
        if not text:
            raise InvalidInput("empty arrangement")
        if text.startswith("{"):
            try:
                return cls.from_json(json.loads(text))
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"bad arrangement JSON: {exc}") from None
        try:
            values = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError:
            raise InvalidInput(f"cannot parse arrangement {text!r}") from None
        return cls.of(values)

    def board(self) -> str:
        rows = []
        for v in self.perm:
            rows.append("." * (v - 1) + "Q" + "." * (self.n - v))
        return "\n".join(rows)


def as_arrangement(a: Arrangement | Sequence[int]) -> Arrangement:
    if isinstance(a, Arrangement):
        return a
    return Arrangement.of(a)


def validate(a: Arrangement | Sequence[int]) -> bool:
    """True iff ``a`` is a permutation and no two queens share a diagonal.

    Runs in O(n): every difference diagonal ``perm[i] - i`` and sum diagonal
    ``perm[i] + i`` may be occupied at most once.
    """
    a = as_arrangement(a)
    n = a.n
    cols = bytearray(n + 1)
    diff = bytearray(2 * n + 1)
    summ = bytearray(2 * n + 1)
    for i, v in enumerate(a.perm, start=1):
        d = v - i + n
        s = v + i
        if cols[v] or diff[d] or summ[s]:
            return False
        cols[v] = diff[d] = summ[s] = 1
    return True


@dataclass(frozen=True)
class LinearMap:
    """``i -> a*i + b (mod n+1)`` with ``a`` in [1, n] and ``b`` in [0, n]."""

    a: int
    b: int

    def __call__(self, i: int, n: int) -> int:
        return (self.a * i + self.b) % (n + 1)

    def check(self, n: int) -> None:
        if not 1 <= self.a <= n or not 0 <= self.b <= n:
            raise InvalidInput(f"map (a={self.a}, b={self.b}) outside a in [1,{n}], b in [0,{n}]")


@dataclass(frozen=True)
class Segment:
    lo: int
    hi: int
    odd_map: LinearMap
    even_map: LinearMap

    def map_for(self, i: int) -> LinearMap:
        return self.odd_map if i % 2 else self.even_map

    def to_json(self) -> dict[str, Any]:
        return {
            "lo": self.lo,
            "hi": self.hi,
            "odd": [self.odd_map.a, self.odd_map.b],
            "even": [self.even_map.a, self.even_map.b],
        }


@dataclass(frozen=True)
class QueenFunction:
    n: int
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInput(f"board size must be a positive integer, got {self.n!r}")
        if not segs:
            raise InvalidInput("a Queen function needs at least one segment")
        expect = 1
        for seg in segs:
            if seg.lo != expect or seg.hi < seg.lo:
                raise InvalidInput(f"segments must tile [1, {self.n}] contiguously; bad segment {seg.lo}..{seg.hi}")
            seg.odd_map.check(self.n)
            seg.even_map.check(self.n)
            expect = seg.hi + 1
        if expect != self.n + 1:
            raise InvalidInput(f"segments end at {expect - 1}, not {self.n}")
        object.__setattr__(self, "_los", tuple(s.lo for s in segs))

    @property
    def width(self) -> int:
        return len(self.segments)

    @classmethod
    def single(cls, n: int, a: int, b: int) -> QueenFunction:
        m = LinearMap(a, b)
        return cls(n, (Segment(1, n, m, m),))

    def segment_of(self, i: int) -> Segment:
        return self.segments[bisect.bisect_right(self._los, i) - 1]  # type: ignore[attr-defined]

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "segments": [s.to_json() for s in self.segments]}

    @classmethod
    def from_json(cls, obj: Any) -> QueenFunction:
        try:
            segs = tuple(
                Segment(int(s["lo"]), int(s["hi"]), LinearMap(*map(int, s["odd"])), LinearMap(*map(int, s["even"])))
                for s in obj["segments"]
            )
            return cls(int(obj["n"]), segs)
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad Queen-function JSON: {exc}") from None


def eval_queen_function(f: QueenFunction, i: int) -> int:
    """Canonical residue in [0, n] of the map covering row ``i``.

    A result of 0 is returned unchanged; :func:`materialize` rejects it.
    """
    if not 1 <= i <= f.n:
        raise InvalidInput(f"row {i} outside [1, {f.n}]")
    return f.segment_of(i).map_for(i)(i, f.n)


def materialize(f: QueenFunction) -> Arrangement:
    n, m = f.n, f.n + 1
    perm = [0] * n
    for seg in f.segments:
        for parity_map, start in ((seg.odd_map, seg.lo | 1), (seg.even_map, seg.lo + (seg.lo & 1))):
            a, b = parity_map.a, parity_map.b
            for i in range(start, seg.hi + 1, 2):
                perm[i - 1] = (a * i + b) % m
    if 0 in perm:
        raise ValueOutOfRange(f"Queen function evaluates to 0 at row {perm.index(0) + 1}")
    if len(set(perm)) != n:
        raise NotAPermutation("Queen function repeats a column")
    return Arrangement(n, tuple(perm))


class SymmetryOp(enum.Enum):
    """Dihedral group of the square; ``REFLECT_ROT90`` means rot90 first, then reflect."""

    IDENTITY = (0, 0)
    ROT90 = (0, 1)
    ROT180 = (0, 2)
    ROT270 = (0, 3)
    REFLECT = (1, 0)
    REFLECT_ROT90 = (1, 1)
    REFLECT_ROT180 = (1, 2)
    REFLECT_ROT270 = (1, 3)

    @property
    def reflected(self) -> bool:
        return bool(self.value[0])

    @property
    def turns(self) -> int:
        return self.value[1]

    def then(self, other: SymmetryOp) -> SymmetryOp:
        """The op equal to applying ``self`` first and ``other`` second."""
        # rot ∘ reflect = reflect ∘ rot⁻¹
        f1, k1 = self.value
        f2, k2 = other.value
        k = (k1 + (-k2 if f1 else k2)) % 4
        return SymmetryOp(((f1 + f2) % 2, k))

    def inverse(self) -> SymmetryOp:
        f, k = self.value
        return SymmetryOp((f, k if f else (-k) % 4))


def _rot90(perm: Sequence[int], n: int) -> list[int]:
    inv = [0] * n
    for i, v in enumerate(perm, start=1):
        inv[v - 1] = i
    return [n + 1 - r for r in inv]


def apply_symmetry(a: Arrangement, s: SymmetryOp) -> Arrangement:
    a.require_permutation()
    n = a.n
    perm: Sequence[int] = a.perm
    for _ in range(s.turns):
        perm = _rot90(perm, n)
    if s.reflected:
        perm = [n + 1 - v for v in perm]
    return Arrangement(n, tuple(perm))


def orbit(a: Arrangement) -> list[Arrangement]:
    """The 8 symmetry images in :class:`SymmetryOp` order (duplicates kept)."""
    return [apply_symmetry(a, s) for s in SymmetryOp]


def canonical_form(a: Arrangement) -> Arrangement:
    """Lexicographically least image of ``a`` under the 8 symmetries."""
    return min(orbit(a), key=lambda x: x.perm)
