"""Equidistant constant-rank matrix codes from 2x2 minor vectors.

``phi`` sends a 2 x n matrix to the length-C(n,2) vector of its 2x2 minors,
coordinates indexed by 2-subsets of the column positions in lexicographic
order (the same global order used for the embedding of 2-subspaces).  For a
nonzero vector v, ``m_matrix`` stacks the minor vectors of v against each
unit vector; the resulting n x C(n,2) matrices, over all nonzero v, form a
linear equidistant code with rank and pairwise rank distance n - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .gf import FieldCtx
from .linalg import MatrixGF

RANK_CODE_GUARD = 1_000_000


class RankMetricError(ValueError):
    pass


def minor_pairs(n: int) -> list[tuple[int, int]]:
    """The 2-subsets of column positions [0, n) in lexicographic order."""
    return list(combinations(range(n), 2))


def phi(mat: MatrixGF) -> tuple[int, ...]:
    """Vector of 2x2 minors of a 2 x n matrix, in lexicographic pair order."""
    if mat.rows != 2:
        raise RankMetricError(f"phi needs a 2-row matrix, got {mat.rows}")
    ctx = mat.ctx
    v = mat.row(0)
    u = mat.row(1)
    return tuple(
        ctx.sub(ctx.mul(v[s], u[t]), ctx.mul(v[t], u[s]))
        for s, t in combinations(range(mat.cols), 2)
    )


def minor_vector(ctx: FieldCtx, v: Sequence[int], u: Sequence[int]) -> tuple[int, ...]:
    """phi of the 2 x n matrix with rows v and u."""
    return phi(MatrixGF.from_rows(ctx, [list(v), list(u)]))


def m_matrix(ctx: FieldCtx, v: Sequence[int]) -> MatrixGF:
    """The n x C(n,2) matrix whose j-th row is the minor vector of (v, e_j)."""
    n = len(v)
    rows = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        rows.append(minor_vector(ctx, v, e))
    return MatrixGF.from_rows(ctx, rows)


@dataclass(frozen=True)
class RankCode:
    """A set of equal-shape matrices over one field."""

    ctx: FieldCtx
    rows: int
    cols: int
    words: frozenset[MatrixGF]

    def __post_init__(self):
        for w in self.words:
            if w.ctx != self.ctx or w.rows != self.rows or w.cols != self.cols:
                raise RankMetricError("all words must share shape and field")

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[MatrixGF]:
        return sorted(self.words, key=lambda m: tuple(int(x) for x in m.a.ravel()))


def rank_code(ctx: FieldCtx, n: int) -> RankCode:
    """The equidistant constant-rank code of all m_matrix(v), v != 0.

    Size q^n - 1; every word has rank n - 1 and every pair of words is at
    rank distance n - 1 (the code minus zero is closed under differences).
    """
    if n < 2:
        raise RankMetricError("need n >= 2")
    if ctx.q**n > RANK_CODE_GUARD:
        raise RankMetricError(f"q^n = {ctx.q**n} exceeds guard {RANK_CODE_GUARD}")
    words = set()
    for v in product(range(ctx.q), repeat=n):
        if any(v):
            words.add(m_matrix(ctx, v))
    out = RankCode(ctx, n, n * (n - 1) // 2, frozenset(words))
    if len(out) != ctx.q**n - 1:
        raise RankMetricError("internal error: duplicate words in rank code")
    return out
