"""Subspace codes, their verified metric profiles, and size bounds.

A :class:`SubspaceCode` is a set of canonical subspaces sharing one ambient
space; mixed dimensions are allowed.  :func:`profile` recomputes every
pairwise intersection from scratch, so a profile is a certificate, not a
cached claim.

The bound calculators return exact integers:

* :func:`sunflower_bound` -- the threshold above which a t-intersecting
  constant-dimension code must be a sunflower.
* :func:`fw_bound` -- the Frankl-Wilson bound for families of k-subspaces
  with pairwise intersection dimension at least t.
* :func:`partial_spread_bounds` -- lower/upper/exact values for the largest
  partial k-spread of F_q^n, combining the divisible case, the residue-1
  case (Beutelspacher), the binary k = 3 case (El-Zanati et al.), the
  floor bound, and the Drake-Freeman improvement.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Optional

from .gf import FieldCtx
from .subspace import Subspace, intersect, qbinom, subspace_sum


class CodeError(ValueError):
    pass


class SubspaceCode:
    """A set of subspaces of F_q^n (set semantics under canonical equality)."""

    __slots__ = ("ctx", "n", "words")

    def __init__(self, ctx: FieldCtx, n: int, words: Iterable[Subspace]):
        ws = frozenset(words)
        for w in ws:
            if w.ctx != ctx or w.n != n:
                raise CodeError("all words must share the code's field and ambient space")
        self.ctx = ctx
        self.n = n
        self.words = ws

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __contains__(self, sub: Subspace) -> bool:
        return sub in self.words

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubspaceCode) and self.ctx == other.ctx
                and self.n == other.n and self.words == other.words)

    def __hash__(self) -> int:
        return hash((self.ctx, self.n, self.words))

    def __repr__(self) -> str:
        dims = sorted({w.k for w in self.words})
        return f"SubspaceCode(|C|={len(self.words)}, n={self.n}, q={self.ctx.q}, dims={dims})"

    def sorted_words(self) -> list[Subspace]:
        return sorted(self.words, key=Subspace.sort_key)

    def dimensions(self) -> tuple[int, ...]:
        return tuple(sorted({w.k for w in self.words}))


@dataclass(frozen=True)
class CodeProfile:
    """Exact all-pairs metric profile of a subspace code."""

    size: int
    dimension_set: tuple[int, ...]
    pairwise_distance_set: tuple[int, ...]
    pairwise_intersection_dim_set: tuple[int, ...]
    is_constant_dimension: bool
    is_equidistant: bool
    t: Optional[int]
    min_distance: Optional[int]
    sunflower_center: Optional[Subspace]
    is_ball: bool


def profile(code: SubspaceCode) -> CodeProfile:
    """Compute the profile by O(|C|^2) exact intersections."""
    if len(code) == 0:
        raise CodeError("cannot profile an empty code")
    words = code.sorted_words()
    size = len(words)
    dims = tuple(sorted({w.k for w in words}))
    const_dim = len(dims) == 1

    inter_dims: set[int] = set()
    distances: set[int] = set()
    center: Optional[Subspace] = None
    center_ok = size >= 2
    for i in range(size):
        for j in range(i + 1, size):
            z = intersect(words[i], words[j])
            inter_dims.add(z.k)
            distances.add(words[i].k + words[j].k - 2 * z.k)
            if center_ok:
                if center is None:
                    center = z
                elif z != center:
                    center_ok = False
    sunflower_center = center if (center_ok and size >= 2) else None

    t = None
    if size >= 2 and len(inter_dims) == 1:
        t = next(iter(inter_dims))

    is_ball = False
    if const_dim and size >= 2:
        span = words[0]
        for w in words[1:]:
            span = subspace_sum(span, w)
            if span.k > dims[0] + 1:
                break
        is_ball = span.k == dims[0] + 1

    return CodeProfile(
        size=size,
        dimension_set=dims,
        pairwise_distance_set=tuple(sorted(distances)),
        pairwise_intersection_dim_set=tuple(sorted(inter_dims)),
        is_constant_dimension=const_dim,
        is_equidistant=len(distances) <= 1,
        t=t,
        min_distance=min(distances) if distances else None,
        sunflower_center=sunflower_center,
        is_ball=is_ball,
    )


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def sunflower_bound(q: int, k: int, t: int) -> int:
    """Threshold M: any t-intersecting code of dimension k with more than M
    codewords is a sunflower."""
    if not 0 <= t < k:
        raise CodeError(f"need 0 <= t < k, got t={t}, k={k}")
    w = (q**k - q**t) // (q - 1)
    return w * w + w + 1


def fw_bound(q: int, n: int, k: int, t: int) -> int:
    """Frankl-Wilson: max size of a family of k-subspaces of F_q^n whose
    pairwise intersections all have dimension at least t."""
    if not 0 <= t <= k <= n:
        raise CodeError(f"need 0 <= t <= k <= n, got t={t}, k={k}, n={n}")
    return max(qbinom(n - t, k - t, q), qbinom(2 * k - t, k, q))


@dataclass(frozen=True)
class SpreadBounds:
    lower: int
    upper: int
    exact: Optional[int]


def partial_spread_bounds(q: int, n: int, k: int) -> SpreadBounds:
    """Bounds on the maximum number of pairwise disjoint k-subspaces of F_q^n.

    Exact when k | n, when n = k+1 .. (residue 1 mod k), when q = 2 and
    k = 3, and in the trivial range n < 2k (any two k-subspaces meet, so
    the maximum is 1).  Otherwise returns the best known bracket.
    """
    if not 0 < k <= n:
        raise CodeError(f"need 0 < k <= n, got k={k}, n={n}")
    if n % k == 0:
        e = (q**n - 1) // (q**k - 1)
        return SpreadBounds(e, e, e)
    if n < 2 * k:
        return SpreadBounds(1, 1, 1)
    r = n % k
    exact: Optional[int] = None
    if r == 1:
        exact = (q**n - q) // (q**k - 1) - q + 1
    elif q == 2 and k == 3:
        exact = (2**n - 2**r) // 7 - r
    if exact is not None:
        return SpreadBounds(exact, exact, exact)
    lower = (q**n - q**k * (q**r - 1) - 1) // (q**k - 1)
    floor_bound = (q**n - 1) // (q**k - 1) - 1
    # Drake-Freeman: subtract floor(Omega) + 1 from the geometric sum, where
    # 2*Omega = sqrt(1 + 4 q^k (q^k - q^r)) - (2 q^k - 2 q^r + 1).
    ell = n // k
    geo = sum(q ** (i * k + r) for i in range(ell))
    disc = 1 + 4 * q**k * (q**k - q**r)
    omega_floor = (isqrt(disc) - (2 * q**k - 2 * q**r + 1)) // 2
    df_bound = geo - omega_floor - 1
    return SpreadBounds(lower, min(floor_bound, df_bound), None)


def largest_sunflower_size(q: int, n: int, k: int, t: int) -> SpreadBounds:
    """Size of the largest t-intersecting sunflower in G_q(n,k): equals the
    largest partial (k-t)-spread of F_q^(n-t)."""
    if not 0 <= t < k <= n:
        raise CodeError(f"need 0 <= t < k <= n, got t={t}, k={k}, n={n}")
    return partial_spread_bounds(q, n - t, k - t)
