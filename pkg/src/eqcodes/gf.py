"""Exact arithmetic in finite fields GF(p^m), p prime, p^m <= 2^16.

Elements are integers in [0, q): the base-p digits of the encoding are the
coefficients of the representative polynomial, constant term first.  So over
GF(2^6) the class of x has encoding 2, and encoding 0b000011 = 3 is x + 1.

A :class:`FieldCtx` is immutable after construction and is safe to share
between threads.  Prime fields use direct modular arithmetic; extension
fields precompute exp/log tables for the smallest primitive element.

When no modulus is supplied, a deterministic built-in choice is used: the
monic primitive polynomial of degree m with the smallest encoding.  For
(p, m) = (2, 6) this is x^6 + x + 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .kernels import EMPTY_TABLE

MAX_ORDER = 1 << 16


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# -- polynomial helpers over GF(p); a polynomial is a tuple of ints, ---------
# -- constant term first, no implied normalization. --------------------------

def _poly_trim(f: Sequence[int]) -> tuple[int, ...]:
    i = len(f)
    while i > 0 and f[i - 1] == 0:
        i -= 1
    return tuple(f[:i])


def _poly_mulmod(f: Sequence[int], g: Sequence[int], mod: Sequence[int], p: int) -> tuple[int, ...]:
    """(f * g) mod the monic polynomial ``mod``, coefficients mod p."""
    deg_mod = len(mod) - 1
    out = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, fi in enumerate(f):
        if fi == 0:
            continue
        for j, gj in enumerate(g):
            if gj:
                out[i + j] = (out[i + j] + fi * gj) % p
    # reduce
    for i in range(len(out) - 1, deg_mod - 1, -1):
        c = out[i]
        if c == 0:
            continue
        out[i] = 0
        for j in range(deg_mod):
            out[i - deg_mod + j] = (out[i - deg_mod + j] - c * mod[j]) % p
    return _poly_trim(out[:deg_mod])


def _poly_divmod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    f = list(_poly_trim(f))
    g = _poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    lead_inv = pow(g[-1], -1, p)
    quot = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = (f[-1] * lead_inv) % p
        shift = len(f) - 1 - dg
        quot[shift] = c
        for j, gj in enumerate(g):
            f[shift + j] = (f[shift + j] - c * gj) % p
        f = list(_poly_trim(f))
    return _poly_trim(quot), _poly_trim(f)


def _poly_eval(f: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial root/factor test for a monic polynomial over GF(p)."""
    f = _poly_trim(coeffs)
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if f[0] == 0:  # divisible by x
        return False
    for x in range(p):
        if _poly_eval(f, x, p) == 0:
            return False
    if deg <= 3:
        return True
    # trial division by monic polynomials of degree 2 .. deg // 2
    for d in range(2, deg // 2 + 1):
        for enc in range(p**d):
            g = [0] * (d + 1)
            e = enc
            for i in range(d):
                g[i] = e % p
                e //= p
            g[d] = 1
            _, rem = _poly_divmod(f, g, p)
            if not rem:
                return False
    return True


def _encode_poly(coeffs: Sequence[int], p: int) -> int:
    e = 0
    for c in reversed(coeffs):
        e = e * p + c
    return e


def _decode_poly(enc: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return tuple(out)


def _x_order(mod: Sequence[int], p: int, q: int) -> int:
    """Multiplicative order of the class of x modulo an irreducible ``mod``."""
    x = (0, 1)
    acc = x
    k = 1
    while acc != (1,):
        acc = _poly_mulmod(acc, x, mod, p)
        k += 1
        if k > q:
            raise FieldError("x is not invertible modulo the given polynomial")
    return k


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Built-in modulus for GF(p^m): smallest-encoding monic primitive polynomial.

    For m == 1 the convention is the polynomial x (prime field).
    """
    if m == 1:
        return (0, 1)
    q = p**m
    for low in range(p**m):
        coeffs = _decode_poly(low, p, m) + (1,)
        if coeffs[0] == 0:
            continue
        if not is_irreducible(coeffs, p):
            continue
        if _x_order(coeffs, p, q) == q - 1:
            return coeffs
    raise FieldError(f"no primitive polynomial found for GF({p}^{m})")  # unreachable


class FieldCtx:
    """Arithmetic context for GF(p^m) with a fixed modulus polynomial."""

    __slots__ = ("p", "m", "q", "modulus", "exp_table", "log_table",
                 "_primitive", "_hash")

    def __init__(self, p: int, m: int, modulus: Optional[Sequence[int]] = None):
        if not _is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree m = {m} must be >= 1")
        q = p**m
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds the supported cap {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise FieldError(f"modulus must have m + 1 = {m + 1} coefficients")
        if any(c < 0 or c >= p for c in modulus):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if m > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        if m == 1:
            self.exp_table = None
            self.log_table = None
            self._primitive = self._find_prime_generator()
        else:
            self._primitive, self.exp_table, self.log_table = self._build_tables()
        self._hash = hash((p, m, modulus))

    # -- construction helpers ------------------------------------------------

    def _find_prime_generator(self) -> int:
        p = self.p
        if p == 2:
            return 1
        target = p - 1
        for g in range(2, p):
            e, x = 1, g
            while x != 1:
                x = (x * g) % p
                e += 1
            if e == target:
                return g
        raise FieldError("no generator found")  # unreachable for prime p

    def _build_tables(self) -> tuple[int, np.ndarray, np.ndarray]:
        p, m, q = self.p, self.m, self.q
        mod = self.modulus
        for g_enc in range(2, q):
            g = _decode_poly(g_enc, p, m)
            exp = np.zeros(q - 1, dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            acc: tuple[int, ...] = (1,)
            ok = True
            for i in range(q - 1):
                enc = _encode_poly(acc, p)
                if i > 0 and enc == 1:
                    ok = False  # order of g divides i < q - 1
                    break
                exp[i] = enc
                log[enc] = i
                acc = _poly_mulmod(acc, g, mod, p)
            if ok and _encode_poly(acc, p) == 1:
                return g_enc, exp, log
        raise FieldError("no primitive element found; modulus is not irreducible?")

    # -- identity / hashing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldCtx) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- element arithmetic ----------------------------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"element encoding {a} out of range [0, {self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        a, b = self._check(a), self._check(b)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return _digit_add(a, b, self.p)

    def neg(self, a: int) -> int:
        a = self._check(a)
        if self.m == 1:
            return (self.p - a) % self.p
        if self.p == 2:
            return a
        return _digit_neg(a, self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = self._check(a), self._check(b)
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(int(self.log_table[a]) + int(self.log_table[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        a = self._check(a)
        if a == 0:
            raise FieldError("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, -1, self.p)
        return int(self.exp_table[(self.q - 1 - int(self.log_table[a])) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        a = self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        base = a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    # -- element <-> coordinate vector -----------------------------------------

    def element_to_vector(self, a: int) -> tuple[int, ...]:
        """Base-p digit expansion of ``a``, constant term first, length m."""
        a = self._check(a)
        return _decode_poly(a, self.p, self.m)

    def vector_to_element(self, vec: Iterable[int]) -> int:
        vec = tuple(int(v) for v in vec)
        if len(vec) != self.m or any(v < 0 or v >= self.p for v in vec):
            raise FieldError(f"need {self.m} coordinates in [0, {self.p})")
        return _encode_poly(vec, self.p)

    def elements(self) -> range:
        return range(self.q)

    # -- kernel plumbing ---------------------------------------------------------

    def tables(self) -> tuple[np.ndarray, np.ndarray]:
        """(exp, log) arrays in the form the matrix kernels expect."""
        if self.m == 1:
            return EMPTY_TABLE, EMPTY_TABLE
        return self.exp_table, self.log_table


def _digit_add(a: int, b: int, p: int) -> int:
    r, shift = 0, 1
    while a > 0 or b > 0:
        r += ((a + b) % p) * shift
        shift *= p
        a //= p
        b //= p
    return r


def _digit_neg(a: int, p: int) -> int:
    r, shift = 0, 1
    while a > 0:
        d = a % p
        if d:
            r += (p - d) * shift
        shift *= p
        a //= p
    return r


@lru_cache(maxsize=None)
def _cached_ctx(p: int, m: int, modulus: Optional[tuple[int, ...]]) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def field_new(p: int, m: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Create (or fetch the cached) GF(p^m) context.

    Without ``modulus`` the deterministic built-in polynomial is used.
    """
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_ctx(int(p), int(m), key)


def field_for_order(q: int) -> FieldCtx:
    """GF(q) with the built-in modulus, for a prime power q."""
    p, m = prime_power(q)
    return field_new(p, m)


def prime_power(q: int) -> tuple[int, int]:
    """Factor q as p^m with p prime, or raise."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            r = q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise FieldError(f"{q} is not a prime power")
            return p, m
    raise FieldError(f"{q} is not a prime power")  # unreachable


def field_arith(ctx: FieldCtx, op: str, a: int, b: Optional[int] = None) -> int:
    """Dispatch a named field operation: add|sub|mul|inv|neg|pow."""
    if op in ("add", "sub", "mul", "pow"):
        if b is None:
            raise FieldError(f"operation {op!r} needs two operands")
        if op == "pow":
            return ctx.pow(a, b)
        return getattr(ctx, op)(a, b)
    if op == "inv":
        return ctx.inv(a)
    if op == "neg":
        return ctx.neg(a)
    raise FieldError(f"unknown field operation {op!r}")


def primitive_element(ctx: FieldCtx) -> int:
    """Smallest encoding whose multiplicative order is q - 1."""
    return ctx._primitive
