"""Code profiles and the size-bound calculators."""

import pytest

from eqcodes import (SubspaceCode, ball, enumerate_grassmannian, field_new,
                     fw_bound, largest_sunflower_size, partial_spread_bounds,
                     profile, qbinom, spread, subspace_from_generators,
                     sunflower_bound)
from eqcodes.codes import CodeError


# ---------------------------------------------------------------------------
# profile
# ---------------------------------------------------------------------------

def test_profile_singleton(gf2):
    w = subspace_from_generators(gf2, 4, [(1, 0, 0, 0)])
    p = profile(SubspaceCode(gf2, 4, [w]))
    assert p.size == 1
    assert p.is_equidistant
    assert p.t is None
    assert p.min_distance is None
    assert p.sunflower_center is None
    assert not p.is_ball


def test_profile_empty_raises(gf2):
    with pytest.raises(CodeError):
        profile(SubspaceCode(gf2, 4, []))


def test_profile_sunflower_through_common_line(gf2):
    center_vec = (1, 0, 0, 0)
    words = [s for s in enumerate_grassmannian(gf2, 4, 2) if s.contains(center_vec)]
    assert len(words) == qbinom(3, 1, 2) == 7
    p = profile(SubspaceCode(gf2, 4, words))
    assert p.t == 1
    assert p.sunflower_center is not None
    assert p.sunflower_center.k == 1
    assert p.sunflower_center.contains(center_vec)
    assert p.min_distance == 2  # 2*(k - t)


def test_profile_ball(gf2):
    code = ball(gf2, 6, 3)
    p = profile(code)
    assert p.size == 15
    assert p.t == 2
    assert p.is_ball
    assert p.sunflower_center is None
    assert p.is_equidistant and p.min_distance == 2


def test_profile_mixed_dimensions(gf2):
    a = subspace_from_generators(gf2, 4, [(1, 0, 0, 0)])
    b = subspace_from_generators(gf2, 4, [(0, 1, 0, 0), (0, 0, 1, 0)])
    p = profile(SubspaceCode(gf2, 4, [a, b]))
    assert not p.is_constant_dimension
    assert p.dimension_set == (1, 2)
    assert not p.is_ball


def test_profile_order_independent(gf2):
    code = ball(gf2, 5, 2)
    words = code.sorted_words()
    p1 = profile(SubspaceCode(gf2, 5, words))
    p2 = profile(SubspaceCode(gf2, 5, list(reversed(words))))
    assert p1 == p2


def test_constant_dim_distance_identity(gf2, gf3):
    # every t-intersecting constant-dimension code satisfies d = 2(k - t)
    for code in (spread(gf2, 4, 2), ball(gf3, 4, 2), ball(gf2, 5, 3)):
        p = profile(code)
        k = p.dimension_set[0]
        assert p.min_distance == 2 * (k - p.t)


def test_code_set_semantics(gf2):
    w = subspace_from_generators(gf2, 3, [(1, 0, 0)])
    again = subspace_from_generators(gf2, 3, [(1, 0, 0)])
    code = SubspaceCode(gf2, 3, [w, again])
    assert len(code) == 1


def test_code_rejects_foreign_words(gf2, gf3):
    w = subspace_from_generators(gf3, 3, [(1, 0, 0)])
    with pytest.raises(CodeError):
        SubspaceCode(gf2, 3, [w])


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def test_sunflower_bound_values():
    assert sunflower_bound(2, 3, 1) == 43  # 6^2 + 6 + 1
    assert sunflower_bound(2, 1, 0) == 3
    # t = k - 1 collapses to (q^{k-1})^2 + q^{k-1} + 1
    for q, k in [(2, 3), (3, 4), (5, 2)]:
        w = q ** (k - 1)
        assert sunflower_bound(q, k, k - 1) == w * w + w + 1


def test_sunflower_bound_requires_t_below_k():
    with pytest.raises(CodeError):
        sunflower_bound(2, 3, 3)


def test_fw_bound_values():
    assert fw_bound(2, 6, 3, 1) == 155
    assert fw_bound(2, 4, 2, 1) == 7
    assert fw_bound(3, 5, 2, 2) == 1  # t = k
    with pytest.raises(CodeError):
        fw_bound(2, 3, 4, 1)


def test_partial_spread_exact_cases():
    assert partial_spread_bounds(2, 4, 2).exact == 5
    assert partial_spread_bounds(2, 5, 2).exact == 9
    assert partial_spread_bounds(2, 8, 3).exact == 34
    assert partial_spread_bounds(2, 7, 2).exact == 41
    assert partial_spread_bounds(3, 4, 2).exact == 10
    assert partial_spread_bounds(2, 6, 3).exact == 9
    assert partial_spread_bounds(2, 3, 2).exact == 1
    # any two k-subspaces meet when n < 2k
    assert partial_spread_bounds(2, 5, 3).exact == 1
    assert partial_spread_bounds(3, 7, 4).exact == 1


def test_partial_spread_bracket_case():
    b = partial_spread_bounds(2, 11, 4)  # residue 3: no exact theorem applies
    assert b.exact is None
    assert b.lower <= b.upper
    assert b.lower == (2**11 - 2**4 * (2**3 - 1) - 1) // (2**4 - 1)


def test_partial_spread_consistency_floor_vs_improved():
    # the improved upper bound never exceeds the floor bound by construction
    for (q, n, k) in [(2, 11, 4), (3, 11, 4), (2, 14, 5), (5, 7, 3)]:
        b = partial_spread_bounds(q, n, k)
        if b.exact is None:
            assert b.upper <= (q**n - 1) // (q**k - 1) - 1


def test_partial_spread_param_validation():
    with pytest.raises(CodeError):
        partial_spread_bounds(2, 3, 0)
    with pytest.raises(CodeError):
        partial_spread_bounds(2, 2, 3)


def test_largest_sunflower_size():
    assert largest_sunflower_size(2, 5, 3, 1).exact == 5
    assert largest_sunflower_size(2, 6, 3, 1).exact == 9
    assert largest_sunflower_size(2, 4, 2, 0) == partial_spread_bounds(2, 4, 2)
    with pytest.raises(CodeError):
        largest_sunflower_size(2, 5, 3, 3)


def test_fw_bound_dominates_constructions(gf2, gf3):
    for code in (spread(gf2, 4, 2), ball(gf2, 5, 3), ball(gf3, 4, 2)):
        p = profile(code)
        k = p.dimension_set[0]
        assert p.size <= fw_bound(code.ctx.q, code.n, k, p.t)
