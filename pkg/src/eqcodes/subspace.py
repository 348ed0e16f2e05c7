"""Subspaces of F_q^n in canonical form, the subspace metric, and enumeration.

Every :class:`Subspace` stores the unique reduced-row-echelon basis of its
span, so structural equality coincides with equality of subspaces.  The zero
subspace (k = 0) is a first-class value.

Enumeration of a Grassmannian walks RREF shapes directly: pivot column sets
in lexicographic order, then free entries in counting order.  This yields each
subspace exactly once and is the deterministic order used everywhere else
(search candidates, code listings).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .gf import FieldCtx
from .linalg import LinalgError, MatrixGF, kernel, rank, rref

ENUMERATION_GUARD = 10_000_000


class SubspaceError(ValueError):
    pass


class Subspace:
    """A k-dimensional subspace of F_q^n with canonical RREF basis."""

    __slots__ = ("ctx", "n", "k", "basis", "_hash")

    def __init__(self, ctx: FieldCtx, n: int, generators: Iterable[Sequence[int]] | MatrixGF):
        if isinstance(generators, MatrixGF):
            mat = generators
        else:
            gens = [list(g) for g in generators]
            if not gens:
                mat = MatrixGF.zeros(ctx, 0, n)
            else:
                mat = MatrixGF(ctx, gens)
        if mat.cols != n:
            raise SubspaceError(f"generators have length {mat.cols}, ambient is {n}")
        if mat.ctx != ctx:
            raise SubspaceError("field context mismatch")
        red, rk, _ = rref(mat)
        self.ctx = ctx
        self.n = n
        self.k = rk
        self.basis = MatrixGF(ctx, red.a[:rk].copy())
        self._hash = None

    @classmethod
    def _from_canonical(cls, ctx: FieldCtx, n: int, basis: np.ndarray) -> "Subspace":
        """Trusted fast path: ``basis`` must already be a full-rank RREF array."""
        self = cls.__new__(cls)
        b = np.ascontiguousarray(basis, dtype=np.int64)
        b.setflags(write=False)
        self.ctx = ctx
        self.n = n
        self.k = b.shape[0]
        self.basis = MatrixGF(ctx, b)
        self._hash = None
        return self

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "Subspace":
        return cls(ctx, n, MatrixGF.zeros(ctx, 0, n))

    @classmethod
    def full(cls, ctx: FieldCtx, n: int) -> "Subspace":
        return cls(ctx, n, MatrixGF.identity(ctx, n))

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.n == other.n
                and self.basis == other.basis)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.basis))
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(dim {self.k} of F_{self.ctx.q}^{self.n})"

    def sort_key(self) -> tuple:
        return (self.k, tuple(int(x) for x in self.basis.a.ravel()))

    # -- membership and points --------------------------------------------------

    def contains(self, vector: Sequence[int]) -> bool:
        """Exact membership test by reduction against the RREF basis."""
        ctx = self.ctx
        v = [int(x) for x in vector]
        if len(v) != self.n:
            raise SubspaceError("vector length mismatch")
        b = self.basis.a
        for i in range(self.k):
            pc = int(np.argmax(b[i] != 0))
            c = v[pc]
            if c:
                for j in range(self.n):
                    if b[i, j]:
                        v[j] = ctx.sub(v[j], ctx.mul(c, int(b[i, j])))
        return all(x == 0 for x in v)

    def vectors(self) -> list[tuple[int, ...]]:
        """All q^k vectors of the subspace (including zero)."""
        ctx = self.ctx
        pts: list[tuple[int, ...]] = [tuple([0] * self.n)]
        for i in range(self.k):
            row = self.basis.row(i)
            scaled = [tuple(ctx.mul(c, x) for x in row) for c in range(1, ctx.q)]
            pts = [tuple(ctx.add(a, b) for a, b in zip(pt, s))
                   for s in [tuple([0] * self.n)] + scaled for pt in pts]
        return pts

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.n != self.n:
            raise SubspaceError("ambient mismatch")
        return all(self.contains(other.basis.row(i)) for i in range(other.k))


def subspace_from_generators(ctx: FieldCtx, n: int, gens: Iterable[Sequence[int]]) -> Subspace:
    """Canonical subspace spanned by the given vectors (dependencies fine)."""
    return Subspace(ctx, n, gens)


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    """The join X + Y."""
    _same_space(x, y)
    if x.k == 0:
        return y
    if y.k == 0:
        return x
    stacked = np.vstack([x.basis.a, y.basis.a])
    return Subspace(x.ctx, x.n, MatrixGF(x.ctx, stacked))


def intersect(x: Subspace, y: Subspace) -> Subspace:
    """Canonical X intersect Y.

    Uses the left null space of the stacked basis matrix: a row (a, b) with
    a*Bx + b*By = 0 yields the intersection vector a*Bx.  The dimension
    identity dim(X) + dim(Y) = dim(X+Y) + dim(X^Y) is checked on the way out.
    """
    _same_space(x, y)
    ctx, n = x.ctx, x.n
    if x.k == 0 or y.k == 0:
        return Subspace.zero(ctx, n)
    stacked = MatrixGF(ctx, np.vstack([x.basis.a, y.basis.a]))
    sum_rank = rank(stacked)
    expected = x.k + y.k - sum_rank
    if expected == 0:
        return Subspace.zero(ctx, n)
    left_null = kernel(stacked.transpose())  # rows (a | b), length k_x + k_y
    coeffs = MatrixGF(ctx, left_null.a[:, : x.k])
    inter = Subspace(ctx, n, coeffs @ x.basis)
    if inter.k != expected:
        raise SubspaceError("internal error: intersection dimension mismatch")
    return inter


def subspace_distance(x: Subspace, y: Subspace) -> int:
    """dim X + dim Y - 2 dim(X^Y); the metric on all of P_q(n)."""
    _same_space(x, y)
    return x.k + y.k - 2 * intersect(x, y).k


def orthogonal_complement(x: Subspace) -> Subspace:
    """Dual under the standard dot product; an (n-k)-subspace."""
    if x.k == 0:
        return Subspace.full(x.ctx, x.n)
    null = kernel(x.basis)
    if null.rows == 0:
        return Subspace.zero(x.ctx, x.n)
    return Subspace(x.ctx, x.n, null)


def qbinom(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient: the number of k-subspaces of F_q^n."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if q < 2:
        raise ValueError("q must be at least 2")
    if k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def enumerate_grassmannian(ctx: FieldCtx, n: int, k: int) -> Iterator[Subspace]:
    """All k-subspaces of F_q^n, each exactly once, in RREF-lex order."""
    q = ctx.q
    total = qbinom(n, k, q)
    if total > ENUMERATION_GUARD:
        raise SubspaceError(f"Grassmannian size {total} exceeds guard {ENUMERATION_GUARD}")
    if k == 0:
        yield Subspace.zero(ctx, n)
        return
    if k > n:
        return
    for pivots in combinations(range(n), k):
        free_cells = [(i, j) for i in range(k)
                      for j in range(pivots[i] + 1, n) if j not in pivots]
        base = np.zeros((k, n), dtype=np.int64)
        for i, pc in enumerate(pivots):
            base[i, pc] = 1
        nfree = len(free_cells)
        for code in range(q**nfree):
            mat = base.copy()
            c = code
            for (i, j) in free_cells:
                mat[i, j] = c % q
                c //= q
            yield Subspace._from_canonical(ctx, n, mat)


def _same_space(x: Subspace, y: Subspace) -> None:
    if x.ctx != y.ctx:
        raise SubspaceError("field context mismatch")
    if x.n != y.n:
        raise SubspaceError(f"ambient mismatch: {x.n} vs {y.n}")
