"""Fillings of skew shapes: semistandard and anti-semistandard tableaux.

A tableau stores one entry tuple per row of its shape, bottom row first,
covering columns inner_r+1 .. outer_r. Entries are positive integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .shapes import Cell, ParseError, Partition, SkewShape, parse_shape

SSYT = "ssyt"
ASSYT = "assyt"


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.shape.rows:
            raise ValueError(
                f"{len(self.rows)} entry rows for a {self.shape.rows}-row shape"
            )
        for r, row in enumerate(self.rows, start=1):
            lo, hi = self.shape.row_bounds(r)
            if len(row) != hi - lo:
                raise ValueError(f"row {r} has {len(row)} entries, expected {hi - lo}")
            if any(x < 1 for x in row):
                raise ValueError(f"row {r} has a nonpositive entry")

    @classmethod
    def of(cls, outer, inner, *rows) -> "Tableau":
        return cls(SkewShape.of(outer, inner), tuple(tuple(r) for r in rows))

    def entry(self, r: int, c: int) -> int | None:
        if not self.shape.has_cell(r, c):
            return None
        return self.rows[r - 1][c - self.shape.inner.part(r) - 1]

    def content(self) -> tuple[int, ...]:
        """Entry multiplicities (count of 1s, of 2s, ...), trailing zeros trimmed."""
        counts: dict[int, int] = {}
        for row in self.rows:
            for x in row:
                counts[x] = counts.get(x, 0) + 1
        top = max(counts) if counts else 0
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def __str__(self) -> str:
        return format_tableau(self)


def validate(t: Tableau, kind: str) -> bool:
    """Row/column comparisons for the given convention.

    ssyt: rows weakly increase left-to-right, columns strictly increase upward.
    assyt: rows strictly decrease left-to-right, columns weakly decrease upward.
    """
    if kind not in (SSYT, ASSYT):
        raise ValueError(f"unknown tableau kind {kind!r}")
    for r in range(1, t.shape.rows + 1):
        lo, hi = t.shape.row_bounds(r)
        for c in range(lo + 1, hi + 1):
            x = t.entry(r, c)
            right = t.entry(r, c + 1)
            if right is not None:
                if kind == SSYT and not x <= right:
                    return False
                if kind == ASSYT and not x > right:
                    return False
            above = t.entry(r + 1, c)
            if above is not None:
                if kind == SSYT and not above > x:
                    return False
                if kind == ASSYT and not above <= x:
                    return False
    return True


def monomial(t: Tableau) -> tuple[int, ...]:
    """Exponent vector of the tableau's monomial; equals its content."""
    return t.content()


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> tuple[Tableau, ...]:
    """All SSYT on shape with entries in 1..max_entry.

    Emitted in lexicographic order of the row-concatenated entry sequences.
    """
    return tuple(_fillings(shape, SSYT, max_entry, None))


def enumerate_fillings(
    shape: SkewShape, kind: str, max_entry: int, content_cap: tuple[int, ...] | None = None
) -> Iterator[Tableau]:
    """Fillings of the given kind, optionally capped componentwise in content."""
    return _fillings(shape, kind, max_entry, content_cap)


def _fillings(
    shape: SkewShape, kind: str, max_entry: int, cap: tuple[int, ...] | None
) -> Iterator[Tableau]:
    if kind not in (SSYT, ASSYT):
        raise ValueError(f"unknown tableau kind {kind!r}")
    bounds = [shape.row_bounds(r) for r in range(1, shape.rows + 1)]
    rows: list[list[int]] = [[] for _ in bounds]
    budget = list(cap) if cap is not None else None

    def entry_at(r: int, c: int) -> int | None:
        if not 1 <= r <= len(bounds):
            return None
        lo, hi = bounds[r - 1]
        if not (lo < c <= hi) or c - lo > len(rows[r - 1]):
            return None
        return rows[r - 1][c - lo - 1]

    def ok(r: int, c: int, v: int) -> bool:
        left = entry_at(r, c - 1)
        below = entry_at(r - 1, c)
        if kind == SSYT:
            if left is not None and not left <= v:
                return False
            if below is not None and not below < v:
                return False
        else:
            if left is not None and not left > v:
                return False
            if below is not None and not below >= v:
                return False
        return True

    cells = shape.cells()

    def rec(i: int) -> Iterator[Tableau]:
        if i == len(cells):
            yield Tableau(shape, tuple(tuple(row) for row in rows))
            return
        r, c = cells[i]
        for v in range(1, max_entry + 1):
            if budget is not None and (v > len(budget) or budget[v - 1] == 0):
                continue
            if not ok(r, c, v):
                continue
            rows[r - 1].append(v)
            if budget is not None:
                budget[v - 1] -= 1
            yield from rec(i + 1)
            rows[r - 1].pop()
            if budget is not None:
                budget[v - 1] += 1

    return rec(0)


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows right-to-left, bottom row first (top row of the page last)."""
    word: list[int] = []
    for row in t.rows:
        word.extend(reversed(row))
    return tuple(word)


def reverse_reading_word(t_minus: Tableau, t_plus: Tableau) -> tuple[int, ...]:
    """Pair word: t_minus by columns bottom-to-top, rightmost column first,
    then t_plus by rows right-to-left, bottom row first."""
    word: list[int] = []
    shape = t_minus.shape
    if shape.rows:
        for c in range(shape.outer.parts[0], 0, -1):
            for r in range(1, shape.rows + 1):
                x = t_minus.entry(r, c)
                if x is not None:
                    word.append(x)
    word.extend(reading_word(t_plus))
    return tuple(word)


def is_yamanouchi(word: tuple[int, ...], tau: Partition = Partition()) -> bool:
    """True if every prefix, after seeding counts with tau, has #i >= #(i+1)."""
    counts: dict[int, int] = {i: p for i, p in enumerate(tau.parts, start=1)}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if counts[x] > counts.get(x - 1, 0) and x > 1:
            return False
    return True


def is_lr_filling(t: Tableau) -> bool:
    """SSYT whose reading word is Yamanouchi; its content is then a partition."""
    return validate(t, SSYT) and is_yamanouchi(reading_word(t))


def lr_fillings(shape: SkewShape) -> Iterator[Tableau]:
    """All LR fillings of shape, generated by lattice-pruned backtracking.

    Cells are filled in reading-word order (row 1 right-to-left, then row 2,
    ...), so the Yamanouchi condition prunes each placement immediately.
    """
    bounds = [shape.row_bounds(r) for r in range(1, shape.rows + 1)]
    rows: list[list[int]] = [[] for _ in bounds]
    counts = [0] * (shape.size + 1)
    order: list[Cell] = []
    for r in range(1, shape.rows + 1):
        lo, hi = bounds[r - 1]
        order.extend(Cell(r, c) for c in range(hi, lo, -1))

    def entry_of(r: int, c: int) -> int | None:
        lo, hi = bounds[r - 1] if 1 <= r <= len(bounds) else (0, 0)
        idx = hi - c
        if not (lo < c <= hi) or idx >= len(rows[r - 1]):
            return None
        return rows[r - 1][idx]

    def rec(i: int) -> Iterator[Tableau]:
        if i == len(order):
            yield Tableau(
                shape, tuple(tuple(reversed(row)) for row in rows)
            )
            return
        r, c = order[i]
        right = entry_of(r, c + 1)
        below = entry_of(r - 1, c) if r > 1 else None
        lo_v = 1 if below is None else below + 1
        hi_v = shape.size if right is None else right
        for v in range(lo_v, hi_v + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            rows[r - 1].append(v)
            yield from rec(i + 1)
            rows[r - 1].pop()
            counts[v] -= 1

    return rec(0)


def format_tableau(t: Tableau) -> str:
    rows = "".join("[" + ",".join(str(x) for x in row) + "]" for row in t.rows)
    return f"{t.shape}: {rows}"


def parse_tableau(text: str) -> Tableau:
    """Parse "431/1: [1,2,7][3,3,5][5]" (rows bottom-to-top)."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"bad tableau {text!r}: missing ':'")
    shape = parse_shape(head)
    body = body.strip()
    rows: list[tuple[int, ...]] = []
    if body:
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError(f"bad tableau {text!r}: rows must be bracketed")
        for chunk in body[1:-1].split("]["):
            chunk = chunk.strip()
            try:
                rows.append(tuple(int(tok) for tok in chunk.split(",")) if chunk else ())
            except ValueError:
                raise ParseError(f"bad tableau {text!r}: bad row {chunk!r}") from None
    try:
        return Tableau(shape, tuple(rows))
    except ValueError as exc:
        raise ParseError(f"bad tableau {text!r}: {exc}") from None
