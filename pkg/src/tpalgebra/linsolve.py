"""Exact linear algebra over the scalar field: nullspace, rank, inverse.

Elimination uses first-nonzero pivoting in column order, so results are
deterministic: identical input yields identical output.  Systems beyond the
configured unknown capacity raise CapacityError instead of thrashing.
"""

from __future__ import annotations

import os

from .errors import CapacityError, DimensionError
from .scalars import ONE, Scalar

DEFAULT_CAPACITY = 20000


def capacity_limit() -> int:
    return int(os.environ.get("TPA_CAPACITY", DEFAULT_CAPACITY))


class ExactMatrix:
    """Rectangular matrix with sparse rows of Scalars."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        # one dict col -> Scalar per row; zero entries omitted
        self.rows: list[dict[int, Scalar]] = (
            [dict(r) for r in rows] if rows is not None else [{} for _ in range(nrows)]
        )
        if len(self.rows) != nrows:
            raise DimensionError("row count mismatch")

    @staticmethod
    def from_dense(data) -> "ExactMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        m = ExactMatrix(nrows, ncols)
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise DimensionError("ragged matrix")
            m.rows[i] = {j: Scalar.of(v) for j, v in enumerate(row) if Scalar.of(v)}
        return m

    def set(self, i: int, j: int, v: Scalar):
        if v:
            self.rows[i][j] = v
        else:
            self.rows[i].pop(j, None)

    def add_to(self, i: int, j: int, v: Scalar):
        s = self.rows[i].get(j)
        self.set(i, j, s + v if s is not None else v)

    def mul_vec(self, vec) -> list[Scalar]:
        return [
            sum((c * vec[j] for j, c in row.items()), Scalar(0))
            for row in self.rows
        ]


def _rref(m: ExactMatrix):
    """Reduced row echelon form in place; returns pivot (row, col) pairs."""
    rows = [dict(r) for r in m.rows]
    pivots: list[tuple[int, int]] = []
    pr = 0
    for pc in range(m.ncols):
        sel = None
        for r in range(pr, len(rows)):
            if pc in rows[r]:
                sel = r
                break
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        inv = rows[pr][pc].inverse()
        if inv != ONE:
            rows[pr] = {j: c * inv for j, c in rows[pr].items()}
        piv_row = rows[pr]
        for r in range(len(rows)):
            if r == pr:
                continue
            f = rows[r].get(pc)
            if f is None:
                continue
            tgt = rows[r]
            for j, c in piv_row.items():
                s = tgt.get(j)
                v = (s - f * c) if s is not None else -(f * c)
                if v:
                    tgt[j] = v
                else:
                    tgt.pop(j, None)
        pivots.append((pr, pc))
        pr += 1
        if pr == len(rows):
            break
    return rows, pivots


def rank(m: ExactMatrix) -> int:
    _, pivots = _rref(m)
    return len(pivots)


def nullspace(m: ExactMatrix) -> list[tuple[Scalar, ...]]:
    """Echelon-normalized basis of {v : Mv = 0}, ordered by free column.

    Each basis vector is scaled so its first nonzero coordinate is 1; its
    free-column coordinate is nonzero in no other basis vector.
    """
    if m.ncols > capacity_limit():
        raise CapacityError(
            f"{m.ncols} unknowns exceed capacity {capacity_limit()}"
        )
    rows, pivots = _rref(m)
    pivot_cols = {pc: pr for pr, pc in pivots}
    free_cols = [c for c in range(m.ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Scalar(0)] * m.ncols
        v[f] = ONE
        for pc, pr in pivot_cols.items():
            c = rows[pr].get(f)
            if c is not None:
                v[pc] = -c
        lead = next(x for x in v if x)
        if lead != ONE:
            inv = lead.inverse()
            v = [x * inv for x in v]
        basis.append(tuple(v))
    return basis


def invert(columns: list[list[Scalar]]) -> list[list[Scalar]] | None:
    """Inverse of a square matrix given as a list of columns, or None."""
    n = len(columns)
    aug = ExactMatrix(n, 2 * n)
    for j, col in enumerate(columns):
        if len(col) != n:
            raise DimensionError("non-square matrix")
        for i, v in enumerate(col):
            aug.set(i, j, Scalar.of(v))
    for i in range(n):
        aug.set(i, n + i, ONE)
    rows, pivots = _rref(aug)
    if [pc for _, pc in pivots[:n]] != list(range(n)) or len(pivots) < n:
        return None
    # RREF turned [A | I] into [I | inv(A)]; slice the right block into columns
    return [[rows[i].get(n + j, Scalar(0)) for i in range(n)] for j in range(n)]
