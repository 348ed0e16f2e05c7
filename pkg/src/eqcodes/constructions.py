"""Constructive recipes for equidistant subspace codes.

Covers: spreads by field reduction, code extension, sunflowers, balls,
codeword-wise duals, the point/line incidence system of a projective
geometry, the minor-coordinate (Pluecker) embedding with its line codes,
a recursion producing the same codes, an embedded sixteen-word exceptional
code in G_2(6,3), and a mixed-dimension equidistant code in P_2(n).

Coordinates of minor vectors are always indexed by 2-subsets of column
positions in lexicographic order.  With that order, the first n-1
coordinates are exactly the pairs containing position 0, followed by the
C(n-1,2) pairs within the remaining positions - which is what makes the
block layout of :func:`recursive_step` line up with plain concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .codes import SubspaceCode, partial_spread_bounds
from .gf import FieldCtx, field_new
from .linalg import MatrixGF, vec_scale
from .rankmetric import minor_vector
from .search import SearchBudget, max_partial_spread
from .subspace import (
    Subspace,
    enumerate_grassmannian,
    orthogonal_complement,
    qbinom,
    subspace_from_generators,
)


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coordinate bookkeeping for minor vectors
# ---------------------------------------------------------------------------

class PluckerIndex:
    """Bijection between 2-subsets of [0, n) and coordinates of F_q^C(n,2).

    Subsets are ordered lexicographically: {0,1}, {0,2}, ..., {0,n-1},
    {1,2}, ...  so the pairs through position 0 occupy the first n-1 slots.
    """

    __slots__ = ("n", "pairs", "_pos")

    def __init__(self, n: int):
        self.n = n
        self.pairs = list(combinations(range(n), 2))
        self._pos = {pair: i for i, pair in enumerate(self.pairs)}

    def __len__(self) -> int:
        return len(self.pairs)

    def position(self, s: int, t: int) -> int:
        if s > t:
            s, t = t, s
        return self._pos[(s, t)]

    def pair(self, position: int) -> tuple[int, int]:
        return self.pairs[position]


# ---------------------------------------------------------------------------
# spreads by field reduction
# ---------------------------------------------------------------------------

def _poly_eval_ctx(ctx: FieldCtx, f: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def _poly_rem_monic(ctx: FieldCtx, f: list[int], g: Sequence[int]) -> list[int]:
    """Remainder of f modulo monic g, coefficients in ctx."""
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        c = f[-1]
        shift = len(f) - 1 - dg
        for j, gj in enumerate(g):
            f[shift + j] = ctx.sub(f[shift + j], ctx.mul(c, gj))
    while f and f[-1] == 0:
        f.pop()
    return f


def _monic_irreducible(ctx: FieldCtx, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree k over GF(q)."""
    if k == 1:
        return (0, 1)
    q = ctx.q
    if k > 6:
        raise ConstructionError(f"irreducible search capped at degree 6, got {k}")
    for low in range(q**k):
        coeffs = []
        e = low
        for _ in range(k):
            coeffs.append(e % q)
            e //= q
        coeffs.append(1)
        if coeffs[0] == 0:
            continue
        if any(_poly_eval_ctx(ctx, coeffs, x) == 0 for x in range(q)):
            continue
        if k <= 3:
            return tuple(coeffs)
        reducible = False
        for d in range(2, k // 2 + 1):
            for genc in range(q**d):
                g = []
                e = genc
                for _ in range(d):
                    g.append(e % q)
                    e //= q
                g.append(1)
                if not _poly_rem_monic(ctx, list(coeffs), g):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(coeffs)
    raise ConstructionError(f"no irreducible polynomial of degree {k} over GF({q})")


def spread(ctx: FieldCtx, n: int, k: int) -> SubspaceCode:
    """A k-spread of F_q^n (k must divide n): pairwise disjoint k-subspaces
    covering every nonzero vector, of size (q^n - 1)/(q^k - 1).

    Realized by field reduction: F_q^n is treated as a free module over the
    degree-k extension (represented by multiplication matrices modulo an
    irreducible polynomial), and the members are its one-dimensional
    submodules.
    """
    if n % k != 0:
        raise ConstructionError(f"k = {k} does not divide n = {n}")
    q = ctx.q
    s = n // k
    modpoly = _monic_irreducible(ctx, k)
    comp = np.zeros((k, k), dtype=np.int64)
    for i in range(k - 1):
        comp[i, i + 1] = 1
    for j in range(k):
        comp[k - 1, j] = ctx.neg(modpoly[j])
    companion = MatrixGF(ctx, comp)
    powers = [MatrixGF.identity(ctx, k)]
    for _ in range(k - 1):
        powers.append(powers[-1] @ companion)
    ext_mats: list[np.ndarray] = []
    for e in range(q**k):
        acc = MatrixGF.zeros(ctx, k, k)
        rem = e
        for i in range(k):
            d = rem % q
            rem //= q
            if d:
                acc = acc + powers[i].scale(d)
        ext_mats.append(acc.a)

    words = []
    big = q**k
    for lead in range(s):
        for tail in range(big ** (s - 1 - lead)):
            rep = [0] * lead + [1]
            e = tail
            for _ in range(s - 1 - lead):
                rep.append(e % big)
                e //= big
            basis = np.hstack([ext_mats[u] for u in rep])
            words.append(Subspace(ctx, n, MatrixGF(ctx, basis)))
    code = SubspaceCode(ctx, n, words)
    expected = (q**n - 1) // (q**k - 1)
    if len(code) != expected:
        raise ConstructionError("internal error: spread has wrong size")
    return code


# ---------------------------------------------------------------------------
# extension, sunflowers, balls, duals
# ---------------------------------------------------------------------------

def extend_code(code: SubspaceCode, ell: int) -> SubspaceCode:
    """Extend ``ell`` times: each step embeds words in one more ambient
    dimension and adjoins the new unit vector, raising every dimension by 1
    while preserving all pairwise distances."""
    if ell < 1:
        raise ConstructionError(f"extension count must be >= 1, got {ell}")
    cur = code
    for _ in range(ell):
        ctx, n = cur.ctx, cur.n
        new_words = []
        for w in cur.words:
            rows = np.zeros((w.k + 1, n + 1), dtype=np.int64)
            if w.k:
                rows[: w.k, :n] = w.basis.a
            rows[w.k, n] = 1
            new_words.append(Subspace(ctx, n + 1, MatrixGF(ctx, rows)))
        cur = SubspaceCode(ctx, n + 1, new_words)
    return cur


def sunflower(ctx: FieldCtx, n: int, k: int, t: int,
              budget: Optional[SearchBudget] = None) -> SubspaceCode:
    """The largest known t-intersecting sunflower in G_q(n,k): extend a
    partial (k-t)-spread of F_q^(n-t) t times.

    When (k-t) divides (n-t) the spread is constructed directly; otherwise a
    certified backtracking search supplies the best partial spread, and the
    result is rejected if it falls short of the known size for that case.
    """
    if not 0 <= t < k <= n:
        raise ConstructionError(f"need 0 <= t < k <= n, got t={t}, k={k}, n={n}")
    if (n - t) % (k - t) == 0:
        base = spread(ctx, n - t, k - t)
    else:
        bounds = partial_spread_bounds(ctx.q, n - t, k - t)
        budget = budget or SearchBudget(node_limit=10_000_000)
        result = max_partial_spread(ctx, n - t, k - t, budget)
        target = bounds.exact if bounds.exact is not None else bounds.lower
        if len(result.best_code) < target:
            raise ConstructionError(
                f"partial spread search reached {len(result.best_code)} < target {target}")
        base = result.best_code
    if t == 0:
        return base
    return extend_code(base, t)


def ball(ctx: FieldCtx, n: int, k: int) -> SubspaceCode:
    """All k-subspaces of the coordinate (k+1)-subspace span{e_1..e_{k+1}}:
    the optimal non-sunflower (k-1)-intersecting code in G_q(n,k)."""
    if k + 1 > n:
        raise ConstructionError(f"need k + 1 <= n, got k={k}, n={n}")
    if k < 1:
        raise ConstructionError("need k >= 1")
    words = []
    for w in enumerate_grassmannian(ctx, k + 1, k):
        rows = np.zeros((k, n), dtype=np.int64)
        rows[:, : k + 1] = w.basis.a
        words.append(Subspace._from_canonical(ctx, n, rows))
    return SubspaceCode(ctx, n, words)


def orthogonal_code(code: SubspaceCode) -> SubspaceCode:
    """Codeword-wise duals.  A t-intersecting code in G_q(n,k) maps to an
    (n-2k+t)-intersecting code in G_q(n,n-k); distances are preserved."""
    dims = code.dimensions()
    if len(dims) != 1:
        raise ConstructionError("orthogonal_code needs a constant-dimension code")
    return SubspaceCode(code.ctx, code.n,
                        [orthogonal_complement(w) for w in code.words])


# ---------------------------------------------------------------------------
# incidence of points and lines
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncidenceMatrix:
    points: int
    blocks: int
    bits: np.ndarray  # points x blocks boolean grid


def steiner_from_grassmannian(ctx: FieldCtx, n: int) -> IncidenceMatrix:
    """Point/line incidence of F_q^n: rows are 1-subspaces, columns are
    2-subspaces, with containment incidence.  This is a Steiner system
    S(2, q+1, (q^n-1)/(q-1)): constant column weight q+1 and every pair of
    points in exactly one common block (verified before returning)."""
    if n < 2:
        raise ConstructionError("need n >= 2")
    q = ctx.q
    points = list(enumerate_grassmannian(ctx, n, 1))
    blocks = list(enumerate_grassmannian(ctx, n, 2))
    index = {p.basis.row(0): i for i, p in enumerate(points)}
    bits = np.zeros((len(points), len(blocks)), dtype=bool)
    for j, blk in enumerate(blocks):
        for vec in blk.vectors():
            if any(vec):
                lead = next(c for c in vec if c)
                rep = vec if lead == 1 else vec_scale(ctx, ctx.inv(lead), vec)
                bits[index[rep], j] = True
    col_w = bits.sum(axis=0)
    if not np.all(col_w == q + 1):
        raise ConstructionError("internal error: block sizes are not constant")
    gram = bits.astype(np.int64) @ bits.astype(np.int64).T
    off = gram[~np.eye(len(points), dtype=bool)]
    if not np.all(off == 1):
        raise ConstructionError("internal error: point pairs not in exactly one block")
    return IncidenceMatrix(points=len(points), blocks=len(blocks), bits=bits)


# ---------------------------------------------------------------------------
# minor-coordinate embedding and the line codes
# ---------------------------------------------------------------------------

def plucker_embed(u: Subspace) -> Subspace:
    """Embed a 2-subspace of F_q^n as the projective point of its basis
    minors: the 1-subspace of F_q^C(n,2) spanned by the vector of 2x2
    minors, coordinates in lexicographic pair order.  Basis-independent."""
    if u.k != 2:
        raise ConstructionError(f"embedding needs dimension 2, got {u.k}")
    from .rankmetric import phi

    minors = phi(u.basis)
    n2 = len(minors)
    return subspace_from_generators(u.ctx, n2, [minors])


def plucker_codeword(v: Subspace) -> Subspace:
    """The (n-1)-subspace of F_q^C(n,2) collecting the embedded images of
    every 2-subspace through the 1-subspace ``v``.

    Built as the span of the minor vectors of (rep, e_i) where rep is the
    canonical representative of ``v`` and e_i runs over all unit vectors
    except the one at rep's leading position.
    """
    if v.k != 1:
        raise ConstructionError(f"need a 1-subspace, got dimension {v.k}")
    ctx, n = v.ctx, v.n
    rep = v.basis.row(0)
    r = next(i for i, c in enumerate(rep) if c)
    rows = []
    for i in range(n):
        if i == r:
            continue
        e = [0] * n
        e[i] = 1
        rows.append(minor_vector(ctx, rep, e))
    out = subspace_from_generators(ctx, n * (n - 1) // 2, rows)
    if out.k != n - 1:
        raise ConstructionError("internal error: line-code word has wrong dimension")
    return out


def plucker_code(ctx: FieldCtx, n: int) -> SubspaceCode:
    """The 1-intersecting equidistant code { codeword(V) : V a 1-subspace }
    in G_q(C(n,2), n-1), of size (q^n - 1)/(q - 1)."""
    if n < 3:
        raise ConstructionError(f"need n >= 3, got {n}")
    words = [plucker_codeword(v) for v in enumerate_grassmannian(ctx, n, 1)]
    code = SubspaceCode(ctx, n * (n - 1) // 2, words)
    if len(code) != qbinom(n, 1, ctx.q):
        raise ConstructionError("internal error: line code has wrong size")
    return code


def recursive_step(prev: SubspaceCode, ctx: FieldCtx, n: int) -> SubspaceCode:
    """One step of the recursion: from the line code for n-1 build the code
    for n, as q codewords per projective point of F_q^(n-1) plus one extra.

    The input is validated to be the line code for n-1 (ambient C(n-1,2),
    size [n-1 choose 1]_q, constant dimension n-2, 1-intersecting).  The
    output equals :func:`plucker_code` for n as a set.
    """
    from .codes import profile

    if n < 4:
        raise ConstructionError(f"need n >= 4, got {n}")
    if prev.ctx != ctx:
        raise ConstructionError("field context mismatch")
    q = ctx.q
    m = n - 1
    inner = (n - 1) * (n - 2) // 2
    if prev.n != inner:
        raise ConstructionError(f"previous code has ambient {prev.n}, expected {inner}")
    if prev.dimensions() != (n - 2,) or len(prev) != qbinom(n - 1, 1, q):
        raise ConstructionError("previous code does not look like the line code")
    prof = profile(prev)
    if not (prof.is_equidistant and prof.t == 1):
        raise ConstructionError("previous code fails its 1-intersecting profile check")

    n2 = n * (n - 1) // 2
    words = []
    eye = np.eye(m, dtype=np.int64)

    base = np.zeros((m, n2), dtype=np.int64)
    base[:, :m] = eye
    words.append(Subspace(ctx, n2, MatrixGF(ctx, base)))

    for vhat_sub in enumerate_grassmannian(ctx, m, 1):
        vhat = vhat_sub.basis.row(0)
        r = next(i for i, c in enumerate(vhat) if c)
        unit_minors = []
        for i in range(m):
            e = [0] * m
            e[i] = 1
            unit_minors.append(minor_vector(ctx, vhat, e))

        rows = np.zeros((m, n2), dtype=np.int64)
        rows[0, :m] = vhat
        fill = 1
        for i in range(m):
            if i == r:
                continue
            rows[fill, m:] = unit_minors[i]
            fill += 1
        words.append(Subspace(ctx, n2, MatrixGF(ctx, rows)))

        for a in range(1, q):
            rows = np.zeros((m, n2), dtype=np.int64)
            rows[:, :m] = eye
            for i in range(m):
                rows[i, m:] = vec_scale(ctx, a, unit_minors[i])
            words.append(Subspace(ctx, n2, MatrixGF(ctx, rows)))

    code = SubspaceCode(ctx, n2, words)
    if len(code) != qbinom(n, 1, q):
        raise ConstructionError("internal error: recursion produced a wrong-size code")
    return code


# ---------------------------------------------------------------------------
# the sixteen-word code in G_2(6,3)
# ---------------------------------------------------------------------------

# Exponent triples of the primitive element; each triple spans one codeword.
_G263_TRIPLES = (
    (0, 1, 2), (0, 15, 10), (6, 52, 51), (12, 54, 15),
    (10, 26, 25), (18, 1, 59), (33, 20, 59), (49, 26, 46),
    (12, 9, 29), (25, 0, 58), (41, 2, 36), (36, 34, 30),
    (6, 5, 33), (19, 10, 6), (58, 6, 49), (36, 29, 26),
)

G263_MODULUS = (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1


def example_code_g2_6_3() -> SubspaceCode:
    """A sixteen-word 1-intersecting equidistant non-sunflower code in
    G_2(6,3), exceeding the fifteen-word line-code construction by one.

    The words are spans of triples of powers of the primitive element of
    GF(2^6) built from x^6 + x + 1, read as vectors of F_2^6.
    """
    big = field_new(2, 6, G263_MODULUS)
    alpha = 2  # the class of x, primitive for this modulus
    ctx = field_new(2, 1)  # the words are binary subspaces of F_2^6
    words = []
    for triple in _G263_TRIPLES:
        gens = [big.element_to_vector(big.pow(alpha, e)) for e in triple]
        words.append(subspace_from_generators(ctx, 6, gens))
    code = SubspaceCode(ctx, 6, words)
    if len(code) != 16:
        raise ConstructionError("internal error: embedded dataset is corrupted")
    return code


# ---------------------------------------------------------------------------
# mixed-dimension equidistant code in P_2(n)
# ---------------------------------------------------------------------------

def mixed_projective_code(n: int, budget: Optional[SearchBudget] = None) -> SubspaceCode:
    """An equidistant code of distance 4 in P_2(n), n odd, mixing dimensions
    2 and 4: the twice-extended maximal partial 2-spread of F_2^(n-2), plus
    three 2-subspaces built from its uncovered vectors.

    Requires a certified maximal partial spread from the search module.
    """
    if n < 5 or n % 2 == 0:
        raise ConstructionError(f"need odd n >= 5, got {n}")
    ctx = field_new(2, 1)
    budget = budget or SearchBudget(node_limit=10_000_000)
    result = max_partial_spread(ctx, n - 2, 2, budget)
    if not result.certified_optimal:
        raise ConstructionError(
            "partial spread search exhausted its budget without certification")
    base = result.best_code
    extended = extend_code(base, 2)

    covered: set[tuple[int, ...]] = set()
    for w in base.words:
        for vec in w.vectors():
            if any(vec):
                covered.add(vec)
    from itertools import product

    uncovered = sorted(vec for vec in product(range(2), repeat=n - 2)
                       if any(vec) and vec not in covered)
    if len(uncovered) < 3:
        raise ConstructionError("unexpected covering: fewer than 3 vectors left over")

    def word(last2_a: tuple[int, int], extra: tuple[int, ...]) -> Subspace:
        first = [0] * (n - 2) + list(last2_a)
        second = list(extra) + [1, 1]
        return subspace_from_generators(ctx, n, [first, second])

    extras = [
        word((0, 1), uncovered[0]),
        word((1, 0), uncovered[1]),
        word((1, 1), uncovered[2]),
    ]
    return SubspaceCode(ctx, n, list(extended.words) + extras)
