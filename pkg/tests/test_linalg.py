"""RREF, determinants, kernels, and rank distance, cross-checked against
brute-force oracles (span enumeration, permutation-expansion determinants)."""

import itertools
import random

import numpy as np
import pytest

from eqcodes import MatrixGF, det, field_new, kernel, rank, rank_distance, rref
from eqcodes.linalg import LinalgError, vec_add, vec_scale


def span_set(ctx, rows):
    """Brute-force row span as a frozenset of tuples (oracle)."""
    out = set()
    k = len(rows)
    for coeffs in itertools.product(range(ctx.q), repeat=k):
        v = tuple([0] * len(rows[0])) if rows else ()
        for c, r in zip(coeffs, rows):
            v = vec_add(ctx, v, vec_scale(ctx, c, r))
        out.add(v)
    return frozenset(out)


def leibniz_det(ctx, mat):
    """Permutation-expansion determinant (oracle, n <= 4)."""
    n = mat.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = 1
        for i in range(n):
            term = ctx.mul(term, int(mat.a[i, perm[i]]))
        total = ctx.add(total, term if sign > 0 else ctx.neg(term))
    return total


def random_matrix(ctx, rng, rows, cols):
    return MatrixGF(ctx, [[rng.randrange(ctx.q) for _ in range(cols)]
                          for _ in range(rows)])


# ---------------------------------------------------------------------------
# rref
# ---------------------------------------------------------------------------

def test_rref_identity(gf2):
    m = MatrixGF.identity(gf2, 3)
    r, rk, piv = rref(m)
    assert r == m and rk == 3 and piv == (0, 1, 2)


def test_rref_dependent_rows(gf2):
    m = MatrixGF(gf2, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])  # row3 = row1 + row2
    _, rk, _ = rref(m)
    assert rk == 2


def test_rref_idempotent(gf3):
    rng = random.Random(7)
    for _ in range(50):
        m = random_matrix(gf3, rng, rng.randrange(1, 5), rng.randrange(1, 6))
        r1, _, _ = rref(m)
        r2, _, _ = rref(r1)
        assert r1 == r2


@pytest.mark.parametrize("q_params", [(2, 1), (3, 1), (2, 2)])
def test_rref_preserves_rowspace(q_params):
    ctx = field_new(*q_params)
    rng = random.Random(13)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 7)
        m = random_matrix(ctx, rng, rows, cols)
        r, rk, piv = rref(m)
        assert span_set(ctx, m.tolist()) == span_set(ctx, r.tolist())
        assert list(piv) == sorted(piv)
        # rows below the rank are zero
        assert not r.a[rk:].any()


def test_rref_pivots_scaled_to_one(gf5):
    rng = random.Random(99)
    for _ in range(30):
        m = random_matrix(gf5, rng, 3, 4)
        r, rk, piv = rref(m)
        for i, pc in enumerate(piv):
            assert int(r.a[i, pc]) == 1
            # pivot column zero elsewhere
            col = list(r.a[:, pc])
            assert sum(1 for x in col if x) == 1


# ---------------------------------------------------------------------------
# det
# ---------------------------------------------------------------------------

def test_det_identity(gf2):
    assert det(MatrixGF.identity(gf2, 2)) == 1


def test_det_repeated_rows(gf3):
    assert det(MatrixGF(gf3, [[1, 1], [1, 1]])) == 0


def test_det_hand_value(gf5):
    assert det(MatrixGF(gf5, [[1, 2], [3, 4]])) == 3  # 4 - 6 = -2 = 3 mod 5


@pytest.mark.parametrize("q_params", [(2, 1), (3, 1), (5, 1), (2, 2)])
def test_det_matches_leibniz(q_params):
    ctx = field_new(*q_params)
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(1, 5)
        m = random_matrix(ctx, rng, n, n)
        assert det(m) == leibniz_det(ctx, m)


def test_det_multiplicative(gf5):
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randrange(1, 5)
        a = random_matrix(gf5, rng, n, n)
        b = random_matrix(gf5, rng, n, n)
        assert det(a @ b) == gf5.mul(det(a), det(b))


def test_det_requires_square(gf2):
    with pytest.raises(LinalgError):
        det(MatrixGF(gf2, [[1, 0, 1]]))


# ---------------------------------------------------------------------------
# kernel
# ---------------------------------------------------------------------------

def test_kernel_identity(gf2):
    assert kernel(MatrixGF.identity(gf2, 4)).rows == 0


def test_kernel_zero_matrix(gf2):
    k = kernel(MatrixGF.zeros(gf2, 2, 3))
    assert k.rows == 3


def test_kernel_single_parity_row(gf2):
    k = kernel(MatrixGF(gf2, [[1, 1, 1]]))
    assert k.rows == 2
    for i in range(k.rows):
        assert sum(k.row(i)) % 2 == 0


@pytest.mark.parametrize("q_params", [(2, 1), (3, 1), (2, 2)])
def test_kernel_annihilates_and_rank_nullity(q_params):
    ctx = field_new(*q_params)
    rng = random.Random(5)
    for _ in range(40):
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 6)
        m = random_matrix(ctx, rng, rows, cols)
        k = kernel(m)
        assert rank(m) + k.rows == cols
        if k.rows:
            prod = m @ k.transpose()
            assert not prod.a.any()
        assert rank(k) == k.rows if k.rows else True


# ---------------------------------------------------------------------------
# rank distance
# ---------------------------------------------------------------------------

def test_rank_distance_zero_iff_equal(gf2):
    a = MatrixGF(gf2, [[1, 0], [0, 1]])
    assert rank_distance(a, a) == 0


def test_rank_distance_full(gf2):
    assert rank_distance(MatrixGF.identity(gf2, 3), MatrixGF.zeros(gf2, 3, 3)) == 3


def test_rank_distance_metric_axioms(gf3):
    rng = random.Random(17)
    for _ in range(30):
        a = random_matrix(gf3, rng, 3, 4)
        b = random_matrix(gf3, rng, 3, 4)
        c = random_matrix(gf3, rng, 3, 4)
        assert rank_distance(a, b) == rank_distance(b, a)
        assert rank_distance(a, c) <= rank_distance(a, b) + rank_distance(b, c)


def test_rank_distance_shape_mismatch(gf2, gf3):
    with pytest.raises(LinalgError):
        rank_distance(MatrixGF.identity(gf2, 2), MatrixGF.zeros(gf2, 2, 3))
    with pytest.raises(LinalgError):
        rank_distance(MatrixGF.identity(gf2, 2), MatrixGF.identity(gf3, 2))


# ---------------------------------------------------------------------------
# MatrixGF basics
# ---------------------------------------------------------------------------

def test_matrix_validation(gf2):
    with pytest.raises(LinalgError):
        MatrixGF(gf2, [[0, 2]])
    with pytest.raises(LinalgError):
        MatrixGF(gf2, [1, 0])


def test_matrix_hash_eq(gf2):
    a = MatrixGF(gf2, [[1, 0], [0, 1]])
    b = MatrixGF.identity(gf2, 2)
    assert a == b and hash(a) == hash(b)
    assert a != MatrixGF.zeros(gf2, 2, 2)
