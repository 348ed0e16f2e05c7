"""Exact backtracking search over small Grassmannians.

Candidates are enumerated in RREF-lex order; every family of subspaces is
visited at most once (members in increasing candidate index).  Subspaces are
represented by bitmasks over the nonzero vectors of the ambient space, so
disjointness and intersection dimensions reduce to integer bit operations.

Since the full linear group acts transitively on each Grassmannian and
preserves intersection dimensions, a maximum family can always be mapped to
one containing the lexicographically first candidate; both searches therefore
fix that candidate by default, and an exhausted search still certifies the
global optimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .codes import SubspaceCode
from .gf import FieldCtx
from .subspace import Subspace, enumerate_grassmannian, intersect


class SearchError(ValueError):
    pass


class _Exhausted(Exception):
    pass


@dataclass
class SearchBudget:
    """Limits for a search run.  At least one limit must be finite.

    Setting a time limit makes the run non-deterministic and uncertifiable;
    certification requires a node-budget-only run.
    """

    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    deterministic: bool = True

    def __post_init__(self):
        if self.node_limit is None and self.time_limit is None:
            raise SearchError("at least one of node_limit/time_limit must be set")
        if self.time_limit is not None:
            self.deterministic = False


@dataclass
class SearchResult:
    best_code: SubspaceCode
    certified_optimal: bool
    nodes_explored: int
    elapsed: float


class _Tracker:
    __slots__ = ("nodes", "node_limit", "deadline")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.deadline = (time.perf_counter() + budget.time_limit
                         if budget.time_limit is not None else None)

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Exhausted
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.perf_counter() > self.deadline:
                raise _Exhausted


def point_mask(sub: Subspace) -> int:
    """Bitmask over nonzero ambient vectors; bit index is the mixed-radix
    encoding of the coordinate tuple."""
    q = sub.ctx.q
    mask = 0
    for vec in sub.vectors():
        if any(vec):
            idx = 0
            for c in reversed(vec):
                idx = idx * q + c
            mask |= 1 << idx
    return mask


def max_partial_spread(ctx: FieldCtx, n: int, k: int, budget: SearchBudget,
                       fix_first: bool = True) -> SearchResult:
    """Largest family of pairwise disjoint k-subspaces of F_q^n found within
    budget; ``certified_optimal`` when the tree was exhausted on a
    node-budget-only run.

    Pruning: a family of size s whose remaining compatible candidates cover
    ``c`` further points can reach at most s + c // (q^k - 1) members.
    """
    if not 0 < k <= n:
        raise SearchError(f"need 0 < k <= n, got k={k}, n={n}")
    start = time.perf_counter()
    cands = list(enumerate_grassmannian(ctx, n, k))
    masks = [point_mask(w) for w in cands]
    per_word = ctx.q**k - 1
    tracker = _Tracker(budget)
    best: list[int] = []

    def rec(chosen: list[int], covered: int, remaining: list[int]) -> None:
        nonlocal best
        for pos, j in enumerate(remaining):
            tracker.tick()
            new_cov = covered | masks[j]
            if len(chosen) + 1 > len(best):
                best = chosen + [j]
            rest = [l for l in remaining[pos + 1:] if not masks[l] & new_cov]
            if rest:
                coverable = 0
                for l in rest:
                    coverable |= masks[l]
                bound = len(chosen) + 1 + min(len(rest),
                                              coverable.bit_count() // per_word)
                if bound > len(best):
                    chosen.append(j)
                    rec(chosen, new_cov, rest)
                    chosen.pop()

    exhausted = True
    try:
        if fix_first:
            best = [0]
            rest = [j for j in range(1, len(cands)) if not masks[j] & masks[0]]
            rec([0], masks[0], rest)
        else:
            rec([], 0, list(range(len(cands))))
    except _Exhausted:
        exhausted = False

    elapsed = time.perf_counter() - start
    code = SubspaceCode(ctx, n, [cands[i] for i in best])
    certified = exhausted and budget.time_limit is None
    return SearchResult(code, certified, tracker.nodes, elapsed)


def max_t_intersecting_clique(ctx: FieldCtx, n: int, k: int, t: int,
                              budget: SearchBudget,
                              forbid_sunflower: bool = False,
                              fix_first: bool = True) -> SearchResult:
    """Largest clique in the graph on G_q(n,k) whose edges join subspaces
    meeting in dimension exactly t.

    With ``forbid_sunflower`` the incumbent is only updated on families of
    size >= 3 whose pairwise intersections are not all one fixed subspace;
    the tree itself is still explored exhaustively, since a family that is a
    sunflower so far can stop being one after further extension.  If no
    qualifying clique exists the returned code is empty.
    """
    if not 0 <= t < k <= n:
        raise SearchError(f"need 0 <= t < k <= n, got t={t}, k={k}, n={n}")
    start = time.perf_counter()
    cands = list(enumerate_grassmannian(ctx, n, k))
    masks = [point_mask(w) for w in cands]
    nc = len(cands)
    common_target = ctx.q**t - 1
    adj = [0] * nc
    for i in range(nc):
        for j in range(i + 1, nc):
            if (masks[i] & masks[j]).bit_count() == common_target:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    tracker = _Tracker(budget)
    best: list[int] = []

    def qualifies(size: int, is_sf: bool) -> bool:
        if not forbid_sunflower:
            return True
        return size >= 3 and not is_sf

    def rec(chosen: list[int], allowed: int,
            center: Optional[Subspace], is_sf: bool) -> None:
        nonlocal best
        rest = allowed
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            tracker.tick()
            if forbid_sunflower:
                if len(chosen) == 0:
                    new_center, new_sf = None, True
                elif len(chosen) == 1:
                    new_center = intersect(cands[chosen[0]], cands[j])
                    new_sf = True
                elif is_sf:
                    new_center, new_sf = center, True
                    for i in chosen:
                        if intersect(cands[i], cands[j]) != center:
                            new_sf = False
                            break
                else:
                    new_center, new_sf = None, False
            else:
                new_center, new_sf = None, False
            if len(chosen) + 1 > len(best) and qualifies(len(chosen) + 1, new_sf):
                best = chosen + [j]
            nxt = rest & adj[j]
            if nxt and len(chosen) + 1 + nxt.bit_count() > len(best):
                chosen.append(j)
                rec(chosen, nxt, new_center, new_sf)
                chosen.pop()

    exhausted = True
    try:
        if fix_first and nc:
            if qualifies(1, True):
                best = [0]
            rec([0], adj[0], None, True)
        else:
            rec([], (1 << nc) - 1, None, True)
    except _Exhausted:
        exhausted = False

    elapsed = time.perf_counter() - start
    code = SubspaceCode(ctx, n, [cands[i] for i in best])
    certified = exhausted and budget.time_limit is None
    return SearchResult(code, certified, tracker.nodes, elapsed)
