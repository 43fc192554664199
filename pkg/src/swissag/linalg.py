"""Exact dense linear algebra over a FieldCtx.

Matrices are numpy uint16 arrays of element codes; all row operations are
vectorized through the field context's table lookups.  Pivoting is
deterministic (leftmost nonzero column, first available row), so reduced
forms, ranks and nullspace bases are bit-for-bit reproducible.
"""

from __future__ import annotations

import numpy as np

from .fields import FieldCtx

__all__ = [
    "RowReducer",
    "rref",
    "rank",
    "nullspace",
    "rowspace_contained",
    "rowspaces_equal",
    "gram_is_zero",
]


class RowReducer:
    """Incremental reduced row-echelon accumulator.

    Rows can be offered one at a time; each is reduced against the current
    basis and accepted only if it extends the rowspace.  The internal rows
    are kept fully reduced (pivot entries one, pivot columns cleared), so
    rank queries and nullspace extraction are direct.
    """

    def __init__(self, ctx: FieldCtx, ncols: int):
        self.ctx = ctx
        self.ncols = ncols
        self.rows: list[np.ndarray] = []   # reduced rows, pivot cols ascending
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        ctx = self.ctx
        for piv, row in zip(self.pivots, self.rows):
            c = int(v[piv])
            if c:
                v = ctx.vsub(v, ctx.vscale(row, c))
        return v

    def offer(self, v: np.ndarray) -> bool:
        """Reduce v against the basis; absorb it if independent."""
        ctx = self.ctx
        v = self._reduce(v.astype(np.uint16))
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = ctx.vscale(v, ctx.inv(int(v[piv])))
        # clear the new pivot column from existing rows
        for i, row in enumerate(self.rows):
            c = int(row[piv])
            if c:
                self.rows[i] = ctx.vsub(row, ctx.vscale(v, c))
        pos = int(np.searchsorted(np.array(self.pivots), piv))
        self.rows.insert(pos, v)
        self.pivots.insert(pos, piv)
        return True

    def residual(self, v: np.ndarray) -> np.ndarray:
        """v reduced against the basis, without absorbing it."""
        return self._reduce(v.astype(np.uint16))

    def matrix(self) -> np.ndarray:
        if not self.rows:
            return np.zeros((0, self.ncols), dtype=np.uint16)
        return np.vstack(self.rows)


def _as_matrix(mat: np.ndarray) -> np.ndarray:
    mat = np.asarray(mat, dtype=np.uint16)
    if mat.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return mat


def rref(ctx: FieldCtx, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot column list."""
    mat = _as_matrix(mat)
    red = RowReducer(ctx, mat.shape[1])
    for row in mat:
        red.offer(row)
    return red.matrix(), list(red.pivots)


def rank(ctx: FieldCtx, mat: np.ndarray) -> int:
    return rref(ctx, mat)[0].shape[0]


def nullspace(ctx: FieldCtx, mat: np.ndarray) -> np.ndarray:
    """Deterministic basis of the right nullspace, one row per free column.

    The basis vector for free column j has a one at j and minus the
    reduced-row entries at the pivot columns, so the result always has
    full rank ncols - rank(mat).
    """
    mat = _as_matrix(mat)
    ncols = mat.shape[1]
    red, pivots = rref(ctx, mat)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = np.zeros((len(free), ncols), dtype=np.uint16)
    for i, j in enumerate(free):
        out[i, j] = 1
        for rrow, piv in zip(red, pivots):
            out[i, piv] = ctx.neg(int(rrow[j]))
    return out


def rowspace_contained(ctx: FieldCtx, inner: np.ndarray, outer: np.ndarray) -> bool:
    """True iff rowspace(inner) is a subspace of rowspace(outer)."""
    inner, outer = _as_matrix(inner), _as_matrix(outer)
    red = RowReducer(ctx, outer.shape[1])
    for row in outer:
        red.offer(row)
    return all(not red.residual(row).any() for row in inner)


def rowspaces_equal(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> bool:
    return rowspace_contained(ctx, a, b) and rowspace_contained(ctx, b, a)


def gram_is_zero(ctx: FieldCtx, mat: np.ndarray) -> bool:
    """True iff every pairwise Euclidean inner product of rows vanishes."""
    mat = _as_matrix(mat)
    k = mat.shape[0]
    for i in range(k):
        for j in range(i, k):
            if ctx.vdot(mat[i], mat[j]):
                return False
    return True
