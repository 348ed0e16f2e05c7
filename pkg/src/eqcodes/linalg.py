"""Dense exact linear algebra over a FieldCtx.

A :class:`MatrixGF` is an immutable dense matrix of field element encodings
(int64), tied to its field context.  The heavy operations (RREF, determinant,
products) are delegated to :mod:`eqcodes.kernels`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .gf import FieldCtx, FieldError


class LinalgError(ValueError):
    pass


class MatrixGF:
    """Immutable r x c matrix over GF(q); entries are element encodings."""

    __slots__ = ("ctx", "a", "_hash")

    def __init__(self, ctx: FieldCtx, entries):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            raise LinalgError(f"matrix entries must be 2-D, got shape {a.shape}")
        if a.size and (a.min() < 0 or a.max() >= ctx.q):
            raise LinalgError(f"entries must be encodings in [0, {ctx.q})")
        a.setflags(write=False)
        self.ctx = ctx
        self.a = a
        self._hash = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows: Iterable[Sequence[int]]) -> "MatrixGF":
        rows = [list(r) for r in rows]
        if not rows:
            raise LinalgError("from_rows needs at least one row; use zeros() for empty")
        return cls(ctx, rows)

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatrixGF":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatrixGF":
        return cls(ctx, np.eye(n, dtype=np.int64))

    # -- shape / access ----------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a[i])

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.a]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixGF) and self.ctx == other.ctx
                and self.a.shape == other.a.shape
                and bool(np.array_equal(self.a, other.a)))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, self.a.shape, self.a.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"MatrixGF({self.rows}x{self.cols} over GF({self.ctx.q}))"

    # -- arithmetic ----------------------------------------------------------------

    def _args(self):
        exp, log = self.ctx.tables()
        return self.ctx.p, self.ctx.m, self.ctx.q, exp, log

    def __add__(self, other: "MatrixGF") -> "MatrixGF":
        self._same_shape(other)
        return MatrixGF(self.ctx, kernels.add_mats(self.a, other.a, self.ctx.p, self.ctx.m))

    def __sub__(self, other: "MatrixGF") -> "MatrixGF":
        self._same_shape(other)
        return MatrixGF(self.ctx, kernels.sub_mats(self.a, other.a, self.ctx.p, self.ctx.m))

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        if self.ctx != other.ctx:
            raise LinalgError("field context mismatch")
        if self.cols != other.rows:
            raise LinalgError(f"shape mismatch for product: {self.cols} vs {other.rows}")
        return MatrixGF(self.ctx, kernels.matmul(self.a, other.a, *self._args()))

    def scale(self, s: int) -> "MatrixGF":
        if not 0 <= s < self.ctx.q:
            raise FieldError(f"scalar {s} out of range")
        return MatrixGF(self.ctx, kernels.scale_mat(self.a, s, *self._args()))

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.ctx, self.a.T.copy())

    def _same_shape(self, other: "MatrixGF") -> None:
        if self.ctx != other.ctx:
            raise LinalgError("field context mismatch")
        if self.a.shape != other.a.shape:
            raise LinalgError(f"shape mismatch: {self.a.shape} vs {other.a.shape}")


def rref(mat: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Unique reduced row echelon form: (R, rank, pivot columns)."""
    work = mat.a.copy()
    exp, log = mat.ctx.tables()
    rk, piv = kernels.rref(work, mat.ctx.p, mat.ctx.m, mat.ctx.q, exp, log)
    return MatrixGF(mat.ctx, work), int(rk), tuple(int(c) for c in piv)


def rank(mat: MatrixGF) -> int:
    return rref(mat)[1]


def det(mat: MatrixGF) -> int:
    """Determinant of a square matrix, as a field element encoding."""
    if mat.rows != mat.cols:
        raise LinalgError(f"determinant needs a square matrix, got {mat.rows}x{mat.cols}")
    if mat.rows == 0:
        return 1  # empty product
    work = mat.a.copy()
    exp, log = mat.ctx.tables()
    return int(kernels.det(work, mat.ctx.p, mat.ctx.m, mat.ctx.q, exp, log))


def kernel(mat: MatrixGF) -> MatrixGF:
    """Basis of the right null space; rows v satisfy mat @ v^T = 0.

    Returns a (cols - rank) x cols matrix in RREF row order (possibly 0 rows).
    """
    ctx = mat.ctx
    n = mat.cols
    red, rk, piv = rref(mat)
    free = [j for j in range(n) if j not in piv]
    rows = np.zeros((len(free), n), dtype=np.int64)
    for idx, f in enumerate(free):
        rows[idx, f] = 1
        for i, pc in enumerate(piv):
            c = int(red.a[i, f])
            if c:
                rows[idx, pc] = ctx.neg(c)
    out = MatrixGF(ctx, rows)
    # canonical form (rows above are already independent; RREF orders them)
    if len(free) > 1:
        out = rref(out)[0]
    return out


def rank_distance(a: MatrixGF, b: MatrixGF) -> int:
    """rank(a - b); both matrices must share shape and context."""
    a._same_shape(b)
    return rank(a - b)


def vec_add(ctx: FieldCtx, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    if len(u) != len(v):
        raise LinalgError("vector length mismatch")
    return tuple(ctx.add(int(a), int(b)) for a, b in zip(u, v))


def vec_scale(ctx: FieldCtx, c: int, u: Sequence[int]) -> tuple[int, ...]:
    return tuple(ctx.mul(c, int(a)) for a in u)
