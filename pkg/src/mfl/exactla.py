"""Exact integer linear algebra over sparse rows.

Rows are dicts mapping column ids (ints) to nonzero integers.  Elimination is
fraction-free: rows are combined by cross-multiplication and kept primitive
(content divided out, leading coefficient positive), so the reduced echelon
basis is a canonical representative of the row span over the rationals.
"""

from __future__ import annotations

from math import gcd
from typing import Any, Hashable, Iterable, Sequence

Row = dict[int, int]


def make_primitive(row: Row) -> Row:
    """Divide by the content and make the smallest-column coefficient positive."""
    row = {c: v for c, v in row.items() if v != 0}
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    lead = min(row)
    if row[lead] < 0:
        g = -g
    return {c: v // g for c, v in row.items()}


def _eliminate(target: Row, pivot_row: Row, pivot_col: int) -> Row:
    c = target.get(pivot_col, 0)
    if c == 0:
        return target
    p = pivot_row[pivot_col]
    out = {}
    for col, v in target.items():
        out[col] = p * v
    for col, v in pivot_row.items():
        out[col] = out.get(col, 0) - c * v
    return make_primitive(out)


class EchelonBasis:
    """Incrementally built reduced row echelon basis.

    ``col_pos`` orders the columns for pivot selection (smaller position is
    eliminated first); identity order by default.
    """

    def __init__(self, col_pos: dict[int, int] | None = None):
        self.col_pos = col_pos
        self.pivots: list[int] = []
        self.rows: list[Row] = []

    def _pos(self, col: int) -> int:
        return col if self.col_pos is None else self.col_pos[col]

    def reduce(self, row: Row) -> Row:
        """Reduce a row against the basis without inserting it."""
        row = make_primitive(row)
        for pivot, basis_row in zip(self.pivots, self.rows):
            row = _eliminate(row, basis_row, pivot)
        return row

    def insert(self, row: Row) -> bool:
        """Reduce and insert; returns True if the row enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        pivot = min(row, key=self._pos)
        self.rows = [_eliminate(r, row, pivot) for r in self.rows]
        pos = 0
        while pos < len(self.pivots) and self._pos(self.pivots[pos]) < self._pos(pivot):
            pos += 1
        self.pivots.insert(pos, pivot)
        self.rows.insert(pos, row)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    def canonical(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Hashable canonical form: rows sorted by pivot position."""
        return tuple(tuple(sorted(r.items())) for r in self.rows)


def rref(rows: Iterable[Row], col_pos: dict[int, int] | None = None) -> EchelonBasis:
    basis = EchelonBasis(col_pos)
    for row in rows:
        basis.insert(row)
    return basis


def span_equal(rows_a: Iterable[Row], rows_b: Iterable[Row],
               col_pos: dict[int, int] | None = None) -> bool:
    return rref(rows_a, col_pos).canonical() == rref(rows_b, col_pos).canonical()


def left_kernel(rows: Sequence[dict[Hashable, int]]) -> list[tuple[int, ...]]:
    """Basis of {c : sum_i c_i row_i = 0}, as primitive integer tuples.

    Column ids may be arbitrary hashables; they are re-indexed internally.
    Tag columns tracking the row combination never serve as pivots.
    """
    col_index: dict[Any, int] = {}
    for row in rows:
        for col in row:
            if col not in col_index:
                col_index[col] = len(col_index)
    ncols = len(col_index)
    nrows = len(rows)

    basis = EchelonBasis()  # columns 0..ncols-1 are real, ncols.. are tags
    kernel: list[tuple[int, ...]] = []
    for i, row in enumerate(rows):
        work: Row = {col_index[c]: v for c, v in row.items() if v != 0}
        work[ncols + i] = 1
        work = make_primitive(work)
        for pivot, basis_row in zip(basis.pivots, basis.rows):
            work = _eliminate(work, basis_row, pivot)
        real = {c: v for c, v in work.items() if c < ncols}
        if not real:
            tags = [0] * nrows
            for c, v in work.items():
                tags[c - ncols] = v
            vec = make_primitive({j: v for j, v in enumerate(tags) if v != 0})
            kernel.append(tuple(vec.get(j, 0) for j in range(nrows)))
        else:
            pivot = min(real)
            basis.rows = [_eliminate(r, work, pivot) for r in basis.rows]
            pos = 0
            while pos < len(basis.pivots) and basis.pivots[pos] < pivot:
                pos += 1
            basis.pivots.insert(pos, pivot)
            basis.rows.insert(pos, work)
    return kernel
