"""Downward and upward slides on strip-decorated skew tableaux.

A slide context holds a base shape lam/mu together with an SSYT on
lam_plus/mu_minus, where lam_plus/lam is a horizontal strip and mu/mu_minus
is a vertical strip. The downward slide moves one cell from the outer strip
to the inner strip; the upward slide moves one back. Off its fixed points,
phi pairs each context with one of opposite inner-strip parity and equal
content; its fixed points carry exactly one horizontal strip row and
correspond to tableaux on the diagonal concatenation star(base, (n)).
"""

from __future__ import annotations

from dataclasses import dataclass

from .insertion import (
    FORWARD,
    REVERSE,
    BumpRecord,
    _bump_in,
    _reverse_from,
    _freeze,
    _thaw,
)
from .shapes import HORIZONTAL, VERTICAL, Cell, Partition, SkewShape, star
from .tableaux import SSYT, Tableau, enumerate_ssyt, validate


class NoUpwardPath(ValueError):
    """Upward slide requested but the inner strip is empty."""


class NotFixedPoint(ValueError):
    """Fixed-point conversion requested off the fixed-point locus."""


@dataclass(frozen=True)
class SlideContext:
    base: SkewShape
    tableau: Tableau

    def __post_init__(self) -> None:
        lam, mu = self.base.outer, self.base.inner
        lam_plus, mu_minus = self.tableau.shape.outer, self.tableau.shape.inner
        if not lam_plus.contains(lam) or not SkewShape(lam_plus, lam).is_strip(HORIZONTAL):
            raise ValueError(f"{lam_plus}/{lam} is not a horizontal strip")
        if not mu.contains(mu_minus) or not SkewShape(mu, mu_minus).is_strip(VERTICAL):
            raise ValueError(f"{mu}/{mu_minus} is not a vertical strip")
        if not validate(self.tableau, SSYT):
            raise ValueError("tableau is not semistandard")

    @property
    def n(self) -> int:
        return self.outer_strip.size + self.inner_strip.size

    @property
    def outer_strip(self) -> SkewShape:
        return SkewShape(self.tableau.shape.outer, self.base.outer)

    @property
    def inner_strip(self) -> SkewShape:
        return SkewShape(self.base.inner, self.tableau.shape.inner)


@dataclass(frozen=True)
class SlideStep:
    kind: str  # "reverse", "internal", or "external"
    record: BumpRecord
    tableau: Tableau


def outer_strip_cells(ctx: SlideContext) -> tuple[Cell, ...]:
    """Cells of lam_plus/lam ordered right to left (columns descending)."""
    return tuple(sorted(ctx.outer_strip.cells(), key=lambda c: -c.col))


def inner_strip_cells(ctx: SlideContext) -> tuple[Cell, ...]:
    """Cells of mu/mu_minus ordered bottom to top."""
    return ctx.inner_strip.cells()


def downward_path(ctx: SlideContext) -> BumpRecord | None:
    """Reverse-insert the outer strip right to left on a scratch copy; the
    path of the first entry to land in a row >= 1, if any."""
    outer, inner, rows = _thaw(ctx.tableau)
    for c in outer_strip_cells(ctx):
        path, final, landing = _reverse_from(outer, inner, rows, c.row)
        if landing >= 1:
            return BumpRecord(tuple(path), final, landing, REVERSE)
    return None


def upward_path(ctx: SlideContext) -> BumpRecord | None:
    """The bumping path that internal insertion of the inner strip's bottom
    cell would follow; absent when the inner strip is empty."""
    strip = inner_strip_cells(ctx)
    if not strip:
        return None
    r = strip[0].row
    outer, inner, rows = _thaw(ctx.tableau)
    k = rows[r - 1].pop(0)
    inner[r - 1] += 1
    path = [Cell(r, inner[r - 1])] + _bump_in(outer, inner, rows, k, r + 1)
    return BumpRecord(tuple(path), k, r, FORWARD)


def exits_right(ctx: SlideContext) -> bool:
    """True when the downward path's bottom cell lies strictly below the
    inner strip's bottom cell; vacuously true when the inner strip is empty."""
    down = downward_path(ctx)
    if down is None:
        raise ValueError("context has no downward path")
    return _exits_right(ctx, down)


def _exits_right(ctx: SlideContext, down: BumpRecord) -> bool:
    strip = inner_strip_cells(ctx)
    return not strip or down.path[0].row < strip[0].row


def _stays_weakly_right(path: tuple[Cell, ...], up_path: tuple[Cell, ...]) -> bool:
    """True when every cell of path sits weakly right of the upward path's
    staircase, which is extended below its bottom row and above its top row
    by the respective end columns.

    The extension matters: a reverse path wholly below the upward path must
    count as weakly right (its cells sit right of the staircase's foot) while
    one wholly above must not (it has drifted left past the staircase's head);
    either blanket convention for disjoint rows breaks the involution.
    """
    cols = {c.row: c.col for c in up_path}
    bottom, top = up_path[0], up_path[-1]
    for r, c in path:
        ref = bottom.col if r < bottom.row else top.col if r > top.row else cols[r]
        if c < ref:
            return False
    return True


def downward_slide(ctx: SlideContext, steps: list[SlideStep] | None = None) -> SlideContext:
    """Reverse-insert the outer strip right to left until an entry lands in a
    row >= 1, then re-insert the exited entries in reverse removal order."""
    outer, inner, rows = _thaw(ctx.tableau)

    def snap() -> Tableau:
        return _freeze([*outer], [*inner], [list(r) for r in rows])

    exited: list[int] = []
    for c in outer_strip_cells(ctx):
        path, final, landing = _reverse_from(outer, inner, rows, c.row)
        if steps is not None:
            steps.append(SlideStep("reverse", BumpRecord(tuple(path), final, landing, REVERSE), snap()))
        if landing >= 1:
            break
        exited.append(final)
    for k in reversed(exited):
        path = _bump_in(outer, inner, rows, k, 1)
        if steps is not None:
            steps.append(SlideStep("external", BumpRecord(tuple(path), k, 0, FORWARD), snap()))
    return SlideContext(ctx.base, _freeze(outer, inner, rows))


def upward_slide(ctx: SlideContext, steps: list[SlideStep] | None = None) -> SlideContext:
    """Reverse-insert outer strip cells while their paths stay weakly right of
    the upward path (fixed from the input), internally insert the inner
    strip's bottom entry, then re-insert the exited entries."""
    strip = inner_strip_cells(ctx)
    if not strip:
        raise NoUpwardPath(f"inner strip of {ctx.base} is already empty")
    up_rec = upward_path(ctx)

    outer, inner, rows = _thaw(ctx.tableau)

    def snap() -> Tableau:
        return _freeze([*outer], [*inner], [list(r) for r in rows])

    exited: list[int] = []
    for c in outer_strip_cells(ctx):
        trial = ([*outer], [*inner], [list(r) for r in rows])
        path, final, landing = _reverse_from(*trial, c.row)
        if not _stays_weakly_right(tuple(path), up_rec.path):
            break
        outer, inner, rows = trial
        if steps is not None:
            steps.append(SlideStep("reverse", BumpRecord(tuple(path), final, landing, REVERSE), snap()))
        if landing >= 1:
            break
        exited.append(final)

    r = strip[0].row
    k = rows[r - 1][0]
    rows[r - 1].pop(0)
    inner[r - 1] += 1
    path = [Cell(r, inner[r - 1])] + _bump_in(outer, inner, rows, k, r + 1)
    if steps is not None:
        steps.append(SlideStep("internal", BumpRecord(tuple(path), k, r, FORWARD), snap()))

    for k in reversed(exited):
        path = _bump_in(outer, inner, rows, k, 1)
        if steps is not None:
            steps.append(SlideStep("external", BumpRecord(tuple(path), k, 0, FORWARD), snap()))
    return SlideContext(ctx.base, _freeze(outer, inner, rows))


def phi(ctx: SlideContext, steps: list[SlideStep] | None = None) -> SlideContext:
    """Downward slide when there is no upward path or the downward path
    exits right; upward slide otherwise."""
    if upward_path(ctx) is None:
        return downward_slide(ctx, steps)
    down = downward_path(ctx)
    if down is not None and _exits_right(ctx, down):
        return downward_slide(ctx, steps)
    return upward_slide(ctx, steps)


def is_fixed_point(ctx: SlideContext) -> bool:
    """Empty inner strip and no downward path: phi leaves ctx unchanged."""
    return ctx.inner_strip.size == 0 and downward_path(ctx) is None


def fixed_point_to_star(ctx: SlideContext) -> Tableau:
    """Send a fixed point to the SSYT on star(base, (n)) whose new bottom row
    holds the exited entries in weakly increasing order and whose upper rows
    are the residual tableau."""
    if not is_fixed_point(ctx):
        raise NotFixedPoint(f"phi moves this context (base {ctx.base})")
    outer, inner, rows = _thaw(ctx.tableau)
    exited: list[int] = []
    for c in outer_strip_cells(ctx):
        _, final, landing = _reverse_from(outer, inner, rows, c.row)
        if landing >= 1:
            raise NotFixedPoint("a reverse insertion landed inside the shape")
        exited.append(final)
    residual = _freeze(outer, inner, rows)
    strip_row = tuple(reversed(exited))
    if not strip_row:
        return residual
    target = star(ctx.base, SkewShape.of((len(strip_row),)))
    return Tableau(target, (strip_row,) + residual.rows)


def star_to_fixed_point(base: SkewShape, t: Tableau) -> SlideContext:
    """Inverse of fixed_point_to_star: externally insert the bottom strip row."""
    if t.shape == base:
        return SlideContext(base, t)
    strip_row = t.rows[0]
    if t.shape != star(base, SkewShape.of((len(strip_row),))):
        raise ValueError(f"{t.shape} is not {base} concatenated with one row")
    residual = Tableau(base, t.rows[1:])
    outer, inner, rows = _thaw(residual)
    for k in strip_row:
        _bump_in(outer, inner, rows, k, 1)
    return SlideContext(base, _freeze(outer, inner, rows))


def enumerate_contexts(base: SkewShape, n: int, max_entry: int):
    """All contexts over base with strip sizes summing to n, entries bounded.

    Strata are visited with the outer strip taking n, n-1, ..., 0 cells;
    within a stratum tableaux follow enumerate_ssyt order.
    """
    from .shapes import enumerate_inner_strips, enumerate_outer_strips

    for k in range(n + 1):
        for lam_plus in enumerate_outer_strips(base.outer, n - k, HORIZONTAL):
            for mu_minus in enumerate_inner_strips(base.inner, k, VERTICAL):
                stratum = SkewShape(lam_plus, mu_minus)
                for t in enumerate_ssyt(stratum, max_entry):
                    yield SlideContext(base, t)


def verify_involution(limit_outer: int, limit_n: int, max_entry: int) -> dict:
    """Exhaustively check phi over every base with |outer| <= limit_outer and
    every stratum with n <= limit_n: involutivity, content preservation, sign
    reversal off fixed points, and the fixed-point bijection with star
    tableaux. Returns a JSON-ready report."""
    from .shapes import partitions_of_size, subpartitions_of_size

    failures: list[str] = []
    contexts = 0
    cases = 0
    for m in range(limit_outer + 1):
        for lam in partitions_of_size(m):
            for mu_size in range(m + 1):
                for mu in subpartitions_of_size(lam, mu_size):
                    base = SkewShape(lam, mu)
                    for n in range(limit_n + 1):
                        cases += 1
                        fixed = 0
                        for ctx in enumerate_contexts(base, n, max_entry):
                            contexts += 1
                            image = phi(ctx)
                            back = phi(image)
                            if back != ctx:
                                failures.append(f"phi not involutive at {ctx.tableau} over {base}")
                                continue
                            if image.tableau.content() != ctx.tableau.content():
                                failures.append(f"content changed at {ctx.tableau} over {base}")
                            if image == ctx:
                                fixed += 1
                                if not is_fixed_point(ctx):
                                    failures.append(f"unexpected fixed point {ctx.tableau} over {base}")
                                star_t = fixed_point_to_star(ctx)
                                if star_to_fixed_point(base, star_t) != ctx:
                                    failures.append(f"star round trip failed at {ctx.tableau} over {base}")
                            else:
                                if is_fixed_point(ctx):
                                    failures.append(f"fixed point moved: {ctx.tableau} over {base}")
                                if abs(image.inner_strip.size - ctx.inner_strip.size) != 1:
                                    failures.append(f"sign not reversed at {ctx.tableau} over {base}")
                        star_count = len(enumerate_ssyt(star(base, SkewShape.of((n,))), max_entry))
                        if fixed != star_count:
                            failures.append(
                                f"fixed points ({fixed}) != star tableaux ({star_count}) for {base}, n={n}"
                            )
    return {
        "limit_outer": limit_outer,
        "limit_n": limit_n,
        "max_entry": max_entry,
        "cases": cases,
        "contexts": contexts,
        "failures": failures,
    }
