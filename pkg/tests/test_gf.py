"""Field construction, arithmetic axioms, tables, and vector coordinates."""

import random

import pytest

from eqcodes import field_arith, field_for_order, field_new, primitive_element
from eqcodes.gf import FieldError, default_modulus, is_irreducible, prime_power


def naive_order(ctx, a):
    """Multiplicative order by repeated multiplication (independent oracle)."""
    assert a != 0
    x, k = a, 1
    while x != 1:
        x = ctx.mul(x, a)
        k += 1
        assert k <= ctx.q
    return k


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def test_gf64_uses_pinned_modulus():
    ctx = field_new(2, 6)
    assert ctx.modulus == (1, 1, 0, 0, 0, 0, 1)  # x^6 + x + 1
    assert ctx.q == 64
    explicit = field_new(2, 6, [1, 1, 0, 0, 0, 0, 1])
    assert explicit == ctx


def test_prime_field_modulus_convention():
    ctx = field_new(5, 1)
    assert ctx.modulus == (0, 1)
    assert ctx.exp_table is None and ctx.log_table is None


def test_gf4_multiplication_table():
    ctx = field_new(2, 2, [1, 1, 1])  # x^2 + x + 1
    # x * x = x + 1
    assert ctx.mul(2, 2) == 3
    assert ctx.mul(2, 3) == 1  # x * (x+1) = x^2 + x = 1
    assert ctx.mul(3, 3) == 2


def test_same_inputs_same_context():
    a = field_new(3, 2)
    b = field_new(3, 2)
    assert a is b  # cached
    assert a == field_new(3, 2, a.modulus)


def test_construction_errors():
    with pytest.raises(FieldError):
        field_new(4, 1)  # not prime
    with pytest.raises(FieldError):
        field_new(2, 2, [1, 0, 1])  # x^2 + 1 = (x+1)^2 is reducible
    with pytest.raises(FieldError):
        field_new(2, 2, [1, 1, 0])  # not monic
    with pytest.raises(FieldError):
        field_new(2, 2, [1, 1])  # wrong length
    with pytest.raises(FieldError):
        field_new(2, 17)  # exceeds order cap
    with pytest.raises(FieldError):
        field_new(2, 2, [1, 2, 1])  # coefficient out of range


def test_irreducibility_checker():
    assert is_irreducible((1, 1, 1), 2)  # x^2+x+1
    assert not is_irreducible((1, 0, 1), 2)  # (x+1)^2
    assert is_irreducible((1, 1, 0, 0, 0, 0, 1), 2)
    assert not is_irreducible((1, 0, 0, 0, 0, 0, 1), 2)  # x^6+1
    assert is_irreducible((1, 1), 3)  # linear always


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(49) == (7, 2)
    assert prime_power(5) == (5, 1)
    with pytest.raises(FieldError):
        prime_power(6)
    with pytest.raises(FieldError):
        prime_power(12)
    assert field_for_order(9).q == 9


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_char2_addition(gf2):
    assert gf2.add(1, 1) == 0


def test_gf5_inverse(gf5):
    assert gf5.inv(2) == 3  # 2*3 = 6 = 1 mod 5
    assert gf5.mul(2, gf5.inv(2)) == 1


def test_inverse_of_zero_raises(gf5, gf4):
    for ctx in (gf5, gf4):
        with pytest.raises(FieldError):
            ctx.inv(0)


def test_field_arith_dispatch(gf5):
    assert field_arith(gf5, "add", 3, 4) == 2
    assert field_arith(gf5, "sub", 1, 3) == 3
    assert field_arith(gf5, "mul", 2, 4) == 3
    assert field_arith(gf5, "neg", 2) == 3
    assert field_arith(gf5, "inv", 4) == 4
    assert field_arith(gf5, "pow", 2, 4) == 1
    with pytest.raises(FieldError):
        field_arith(gf5, "mul", 2)
    with pytest.raises(FieldError):
        field_arith(gf5, "frobnicate", 2, 2)


def test_out_of_range_encoding_rejected(gf5):
    with pytest.raises(FieldError):
        gf5.add(5, 0)
    with pytest.raises(FieldError):
        gf5.mul(-1, 2)


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, m):
    ctx = field_new(p, m)
    q = ctx.q
    els = range(q)
    for a in els:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
        for b in els:
            assert ctx.add(a, b) == ctx.add(b, a)
            assert ctx.mul(a, b) == ctx.mul(b, a)
            for c in els:
                assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
                assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
                assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


@pytest.mark.parametrize("p,m", [(5, 2), (2, 6)])
def test_field_axioms_randomized(p, m):
    ctx = field_new(p, m)
    rng = random.Random(20240801)
    for _ in range(10_000):
        a, b, c = (rng.randrange(ctx.q) for _ in range(3))
        assert ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))


# ---------------------------------------------------------------------------
# primitive elements and tables
# ---------------------------------------------------------------------------

def test_primitive_element_gf2(gf2):
    assert primitive_element(gf2) == 1


def test_primitive_element_gf5(gf5):
    assert primitive_element(gf5) == 2
    # 2 generates {2, 4, 3, 1}
    assert naive_order(gf5, 2) == 4


def test_primitive_element_gf64():
    ctx = field_new(2, 6)
    alpha = primitive_element(ctx)
    assert alpha == 2  # the class of x
    assert naive_order(ctx, alpha) == 63
    assert ctx.pow(alpha, 63) == 1
    for d in (1, 3, 7, 9, 21):  # proper divisors of 63
        assert ctx.pow(alpha, d) != 1


def test_primitive_order_divisor_property():
    for q_params in [(2, 2), (3, 2), (2, 4), (7, 1)]:
        ctx = field_new(*q_params)
        g = primitive_element(ctx)
        assert naive_order(ctx, g) == ctx.q - 1
        # smallest such encoding
        for smaller in range(1, g):
            if smaller:
                assert naive_order(ctx, smaller) < ctx.q - 1


def test_exp_log_tables():
    ctx = field_new(2, 6)
    exp = ctx.exp_table
    assert len(exp) == ctx.q - 1
    assert exp[0] == 1
    assert sorted(int(x) for x in exp) == list(range(1, ctx.q))
    for a in range(1, ctx.q):
        assert int(exp[int(ctx.log_table[a])]) == a


# ---------------------------------------------------------------------------
# coordinates
# ---------------------------------------------------------------------------

def test_element_to_vector_examples():
    ctx = field_new(2, 6)
    assert ctx.element_to_vector(1) == (1, 0, 0, 0, 0, 0)
    alpha6 = ctx.pow(2, 6)
    assert ctx.element_to_vector(alpha6) == (1, 1, 0, 0, 0, 0)  # x^6 = x + 1
    g4 = field_new(2, 2)
    assert g4.element_to_vector(3) == (1, 1)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 6), (3, 2), (5, 1)])
def test_vector_roundtrip(p, m):
    ctx = field_new(p, m)
    for a in ctx.elements():
        assert ctx.vector_to_element(ctx.element_to_vector(a)) == a


def test_default_modulus_deterministic():
    assert default_modulus(2, 6) == (1, 1, 0, 0, 0, 0, 1)
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 1) == (0, 1)
