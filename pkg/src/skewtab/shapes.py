"""Partitions, skew shapes, strips, and diagonal concatenation.

Diagrams are drawn in French notation: rows are indexed bottom-up starting
at 1, columns left-to-right starting at 1, so row r of the skew shape
outer/inner occupies columns inner_r+1 .. outer_r. Row 0 is the virtual row
below the diagram where reverse insertion terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

HORIZONTAL = "horizontal"
VERTICAL = "vertical"


class ParseError(ValueError):
    """Raised when a partition, shape, or tableau string is malformed."""


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition.

    Trailing zeros are trimmed on construction, so equality is equality of
    the trimmed part tuples. Ordering is lexicographic on parts.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-indexed, 0 beyond the length."""
        if i < 1:
            raise IndexError(f"row index must be positive, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Containment of diagrams: other_i <= self_i for all i."""
        return all(self.part(i) >= p for i, p in enumerate(other.parts, start=1))

    def conjugate(self) -> "Partition":
        """Transpose the diagram: column lengths become the parts."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1))
        )

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


@dataclass(frozen=True)
class SkewShape:
    """The diagram outer/inner; equality is componentwise on the two partitions.

    Translates of the same cell set (e.g. built by star) are distinct values;
    no translation quotient is applied.
    """

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @classmethod
    def of(cls, outer, inner=()) -> "SkewShape":
        return cls(Partition(tuple(outer)), Partition(tuple(inner)))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def rows(self) -> int:
        return len(self.outer)

    def row_bounds(self, r: int) -> tuple[int, int]:
        """(inner_r, outer_r): row r holds columns inner_r+1 .. outer_r."""
        return self.inner.part(r), self.outer.part(r)

    def has_cell(self, r: int, c: int) -> bool:
        return r >= 1 and self.inner.part(r) < c <= self.outer.part(r)

    def cells(self) -> tuple[Cell, ...]:
        """All cells, row 1 upward, columns ascending within each row."""
        out = []
        for r in range(1, self.rows + 1):
            lo, hi = self.row_bounds(r)
            out.extend(Cell(r, c) for c in range(lo + 1, hi + 1))
        return tuple(out)

    def is_strip(self, direction: str) -> bool:
        """True if no two cells share a column (horizontal) or row (vertical)."""
        cells = self.cells()
        if direction == HORIZONTAL:
            cols = [c.col for c in cells]
            return len(cols) == len(set(cols))
        if direction == VERTICAL:
            rws = [c.row for c in cells]
            return len(rws) == len(set(rws))
        raise ValueError(f"unknown direction {direction!r}")

    def corners(self) -> tuple[frozenset[Cell], frozenset[Cell]]:
        """(inside, outside): cells with no neighbour below/left resp. above/right."""
        cells = self.cells()
        inside = frozenset(
            c for c in cells if not self.has_cell(c.row - 1, c.col) and not self.has_cell(c.row, c.col - 1)
        )
        outside = frozenset(
            c for c in cells if not self.has_cell(c.row + 1, c.col) and not self.has_cell(c.row, c.col + 1)
        )
        return inside, outside

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def __str__(self) -> str:
        return format_shape(self)


def star(a: SkewShape, b: SkewShape) -> SkewShape:
    """Place a above-left of b so rows and columns stay independent.

    b keeps rows 1..len(b.outer), translated right so its inner top-left
    column sits just past a's bottom row; a is stacked on top. The product of
    the corresponding skew Schur functions is the skew Schur function of the
    result.
    """
    if not b.outer.parts:
        return a
    if not a.outer.parts:
        return b
    lb = len(b.outer)
    shift = a.outer.parts[0] - b.inner.part(lb)
    outer = tuple(p + shift for p in b.outer.parts) + a.outer.parts
    inner = tuple(b.inner.part(i) + shift for i in range(1, lb + 1)) + a.inner.parts
    return SkewShape(Partition(outer), Partition(inner))


def _strips_extending(base: Partition, n: int, direction: str) -> Iterator[tuple[int, ...]]:
    if direction == HORIZONTAL:
        max_rows = len(base) + 1
    else:
        max_rows = len(base) + n

    def rec(i: int, budget: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i > max_rows:
            if budget == 0:
                yield acc
            return
        lo = base.part(i)
        if direction == HORIZONTAL:
            hi = lo + budget if i == 1 else min(base.part(i - 1), lo + budget)
        else:
            hi = min(lo + 1, lo + budget)
        if i > 1:
            hi = min(hi, acc[-1])
        for v in range(lo, hi + 1):
            yield from rec(i + 1, budget - (v - lo), acc + (v,))

    yield from rec(1, n, ())


def enumerate_outer_strips(base: Partition, n: int, direction: str) -> tuple[Partition, ...]:
    """All partitions p containing base with p/base a strip of n cells.

    Returned in lexicographic order of parts.
    """
    if direction not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown direction {direction!r}")
    if n < 0:
        raise ValueError("strip size must be nonnegative")
    found = {Partition(parts) for parts in _strips_extending(base, n, direction)}
    return tuple(sorted(found, key=lambda p: p.parts))


def enumerate_inner_strips(base: Partition, k: int, direction: str) -> tuple[Partition, ...]:
    """All partitions q inside base with base/q a strip of k cells.

    Returned in lexicographic order of parts.
    """
    if direction not in (HORIZONTAL, VERTICAL):
        raise ValueError(f"unknown direction {direction!r}")
    if k < 0:
        raise ValueError("strip size must be nonnegative")

    def rec(i: int, budget: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i > len(base):
            if budget == 0:
                yield acc
            return
        hi = base.part(i)
        lo = base.part(i + 1) if direction == HORIZONTAL else max(hi - 1, 0)
        lo = max(lo, hi - budget)
        if i > 1:
            hi = min(hi, acc[-1])
        for v in range(lo, hi + 1):
            yield from rec(i + 1, budget - (base.part(i) - v), acc + (v,))

    found = {Partition(parts) for parts in rec(1, k, ())}
    return tuple(sorted(found, key=lambda p: p.parts))


@lru_cache(maxsize=None)
def partitions_of_size(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in lexicographic order of parts."""

    def rec(budget: int, cap: int) -> Iterator[tuple[int, ...]]:
        if budget == 0:
            yield ()
            return
        for first in range(min(cap, budget), 0, -1):
            for rest in rec(budget - first, first):
                yield (first,) + rest

    return tuple(sorted((Partition(p) for p in rec(n, n)), key=lambda p: p.parts))


def subpartitions_of_size(p: Partition, size: int) -> tuple[Partition, ...]:
    """All partitions of the given size contained in p, lexicographic order."""

    def rec(i: int, budget: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i > len(p):
            if budget == 0:
                yield acc
            return
        hi = min(p.part(i), budget) if i == 1 else min(p.part(i), acc[-1], budget)
        for v in range(hi + 1):
            yield from rec(i + 1, budget - v, acc + (v,))

    found = {Partition(parts) for parts in rec(1, size, ())}
    return tuple(sorted(found, key=lambda q: q.parts))


def superpartitions(p: Partition, added: int) -> tuple[Partition, ...]:
    """All partitions containing p with exactly `added` extra cells."""

    max_rows = len(p) + added

    def rec(i: int, budget: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i > max_rows:
            if budget == 0:
                yield acc
            return
        lo = p.part(i)
        hi = lo + budget if i == 1 else min(acc[-1], lo + budget)
        for v in range(lo, hi + 1):
            yield from rec(i + 1, budget - (v - lo), acc + (v,))

    found = {Partition(parts) for parts in rec(1, added, ())}
    return tuple(sorted(found, key=lambda q: q.parts))


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p.parts) if p.parts else "∅"


def format_shape(s: SkewShape) -> str:
    if s.inner.parts:
        return f"{format_partition(s.outer)}/{format_partition(s.inner)}"
    return format_partition(s.outer)


def parse_partition(text: str) -> Partition:
    """Parse "3,2,2", compact "322" (single digits only), "" or "∅" as empty."""
    text = text.strip()
    if text in ("", "∅"):
        return Partition()
    try:
        if "," in text:
            parts = tuple(int(tok) for tok in text.split(","))
        else:
            parts = tuple(int(ch) for ch in text)
        return Partition(parts)
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None


def parse_shape(text: str) -> SkewShape:
    """Parse "3,2,2/1,1", compact "322/11", or a bare outer partition."""
    text = text.strip()
    if text.count("/") > 1:
        raise ParseError(f"bad shape {text!r}: more than one '/'")
    outer_text, _, inner_text = text.partition("/")
    try:
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    except ValueError as exc:
        raise ParseError(f"bad shape {text!r}: {exc}") from None
