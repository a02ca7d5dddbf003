"""Exact Gaussian elimination over GF(q).

Pivoting takes the first row (top-down) with a nonzero entry in the
current column, so every result is deterministic.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .gf import GF, FieldElement

__all__ = ["Matrix", "DimensionMismatch", "rref", "null_space", "mat_vec"]


class DimensionMismatch(ValueError):
    pass


class Matrix:
    """A rows x cols matrix over a field, stored as canonical integers."""

    __slots__ = ("field", "data")

    def __init__(self, field: GF, entries):
        data = np.asarray(field.validate(entries), dtype=np.int64)
        if data.ndim != 2:
            data = data.reshape(len(data), -1) if data.size else np.zeros((0, 0), np.int64)
        self.field = field
        self.data = data
        self.data.setflags(write=False)

    @classmethod
    def identity(cls, field: GF, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        return FieldElement(self.field, int(self.data[ij]))

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(v)) for v in self.data[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __matmul__(self, z):
        return mat_vec(self, z)

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return rref(self)[2]

    def null_space(self):
        return null_space(self)

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.data.tolist()})"


def _eliminate(field: GF, rows: list[list[int]], reduced: bool) -> list[int]:
    """Row echelon form in place (reduced if asked); returns pivot columns."""
    scale, prepare, sub_scaled = field.row_ops()
    inv = field._inv
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c]:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        lead = rows[r][c]
        if lead != 1:
            # entries left of c are already zero
            rows[r][c:] = scale(rows[r][c:], int(inv[lead]))
        tail = prepare(rows[r][c:])
        for i in range(0 if reduced else r + 1, nrows):
            if i != r and rows[i][c]:
                row = rows[i]
                row[c:] = sub_scaled(row[c:], tail, row[c])
        pivots.append(c)
        r += 1
    return pivots


def rref_array(field: GF, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of an int array; returns (R, pivot columns)."""
    a = np.asarray(a, dtype=np.int64)
    rows = a.tolist()
    pivots = _eliminate(field, rows, reduced=True)
    return np.array(rows, dtype=np.int64).reshape(a.shape), pivots


def null_space_array(field: GF, a: np.ndarray, limit: int | None = None) -> np.ndarray:
    """Kernel basis as rows of an int array, one per free column (ascending).

    Each basis vector has its free variable set to 1, the other free
    variables 0, and pivot variables back-substituted.  ``limit`` stops
    after that many vectors.
    """
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    rows = a.tolist()
    pivots = _eliminate(field, rows, reduced=False)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    if limit is not None:
        free = free[:limit]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    basis[np.arange(len(free)), free] = 1
    for i in range(len(pivots) - 1, -1, -1):
        pc = pivots[i]
        coeffs = np.asarray(rows[i][pc + 1 :], dtype=np.int64)
        if coeffs.size:
            acc = field.sum(field.mul(basis[:, pc + 1 :], coeffs[None, :]), axis=1)
            basis[:, pc] = field.neg(acc)
    return basis


def rref(a: Matrix) -> tuple[Matrix, list[int], int]:
    """Return ``(R, pivot_cols, rank)``; each pivot is 1 and alone in its column."""
    r, pivots = rref_array(a.field, a.data)
    return Matrix(a.field, r), pivots, len(pivots)


def null_space(a: Matrix) -> list[tuple[FieldElement, ...]]:
    basis = null_space_array(a.field, a.data)
    return [tuple(FieldElement(a.field, int(v)) for v in row) for row in basis]


def mat_vec(a: Matrix, z: Sequence) -> tuple[FieldElement, ...]:
    f = a.field
    vec = np.atleast_1d(f.validate(z))
    if vec.size != a.cols:
        raise DimensionMismatch(f"vector of length {vec.size} for {a.rows}x{a.cols} matrix")
    prod = f.mul(a.data, vec[None, :])
    out = f.sum(prod, axis=1) if a.cols else np.zeros(a.rows, np.int64)
    return tuple(FieldElement(f, int(v)) for v in np.atleast_1d(out))
