"""Low-level GF(q) matrix kernels with a JIT backend and an interpreted fallback.

All kernels operate on 2-D ``numpy.int64`` arrays whose entries are field
element encodings, together with the scalar field parameters:

    p, m : characteristic and extension degree (q = p**m)
    q    : field order
    exp, log : discrete-log tables (length q-1 / q arrays; empty for m == 1)

Prime fields (m == 1) use direct modular arithmetic; extension fields use the
tables for multiplication/inversion and digit-wise addition (XOR when p == 2).

Backend selection, at import time, via the ``EQCODES_BACKEND`` environment
variable:

    numba   - require numba, compile the kernels with @njit
    python  - run the same kernels interpreted (no numba import)
    auto    - numba if importable, else python  (default)

``BACKEND`` records which path is active.  The benchmark script
(benchmarks/bench_kernels.py) times both by re-running itself under each
setting.
"""

from __future__ import annotations

import os

import numpy as np

EMPTY_TABLE = np.empty(0, dtype=np.int64)


def _pick_backend() -> str:
    choice = os.environ.get("EQCODES_BACKEND", "auto").strip().lower()
    if choice in ("python", "pure", "numpy"):
        return "python"
    if choice == "numba":
        import numba  # noqa: F401  -- fail loudly if forced but missing

        return "numba"
    if choice not in ("", "auto"):
        raise ValueError(f"unknown EQCODES_BACKEND value: {choice!r}")
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "python"


BACKEND = _pick_backend()


# ---------------------------------------------------------------------------
# scalar field ops
# ---------------------------------------------------------------------------

def fadd(a, b, p, m):
    if m == 1:
        return (a + b) % p
    if p == 2:
        return a ^ b
    r = 0
    shift = 1
    while a > 0 or b > 0:
        r += ((a + b) % p) * shift
        shift *= p
        a //= p
        b //= p
    return r


def fneg(a, p, m):
    if m == 1:
        return (p - a) % p
    if p == 2:
        return a
    r = 0
    shift = 1
    while a > 0:
        d = a % p
        if d:
            r += (p - d) * shift
        shift *= p
        a //= p
    return r


def fsub(a, b, p, m):
    return fadd(a, fneg(b, p, m), p, m)


def fmul(a, b, p, m, q, exp, log):
    if m == 1:
        return (a * b) % p
    if a == 0 or b == 0:
        return 0
    return exp[(log[a] + log[b]) % (q - 1)]


def finv(a, p, m, q, exp, log):
    # caller guarantees a != 0
    if m == 1:
        # Fermat: a**(p-2) mod p
        r = 1
        base = a % p
        e = p - 2
        while e:
            if e & 1:
                r = (r * base) % p
            base = (base * base) % p
            e >>= 1
        return r
    return exp[(q - 1 - log[a]) % (q - 1)]


# ---------------------------------------------------------------------------
# matrix kernels
# ---------------------------------------------------------------------------

def rref(a, p, m, q, exp, log):
    """Reduce ``a`` in place to reduced row echelon form.

    Returns (rank, pivots) where pivots is an int64 array of pivot columns.
    """
    rows, cols = a.shape
    piv = np.empty(cols if cols < rows else rows, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(cols):
                t = a[sel, j]
                a[sel, j] = a[r, j]
                a[r, j] = t
        inv = finv(a[r, c], p, m, q, exp, log)
        if inv != 1:
            for j in range(c, cols):
                a[r, j] = fmul(a[r, j], inv, p, m, q, exp, log)
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    a[i, j] = fsub(a[i, j], fmul(f, a[r, j], p, m, q, exp, log), p, m)
        piv[r] = c
        r += 1
    return r, piv[:r]


def det(a, p, m, q, exp, log):
    """Determinant of square ``a`` by elimination; ``a`` is destroyed."""
    n = a.shape[0]
    d = 1
    for c in range(n):
        sel = -1
        for i in range(c, n):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            return 0
        if sel != c:
            for j in range(n):
                t = a[sel, j]
                a[sel, j] = a[c, j]
                a[c, j] = t
            d = fneg(d, p, m)
        pivot = a[c, c]
        d = fmul(d, pivot, p, m, q, exp, log)
        inv = finv(pivot, p, m, q, exp, log)
        for i in range(c + 1, n):
            if a[i, c] != 0:
                f = fmul(a[i, c], inv, p, m, q, exp, log)
                for j in range(c, n):
                    a[i, j] = fsub(a[i, j], fmul(f, a[c, j], p, m, q, exp, log), p, m)
    return d


def matmul(a, b, p, m, q, exp, log):
    rows = a.shape[0]
    inner = a.shape[1]
    cols = b.shape[1]
    out = np.zeros((rows, cols), dtype=np.int64)
    for i in range(rows):
        for kk in range(inner):
            aik = a[i, kk]
            if aik == 0:
                continue
            for j in range(cols):
                if b[kk, j] != 0:
                    out[i, j] = fadd(out[i, j], fmul(aik, b[kk, j], p, m, q, exp, log), p, m)
    return out


def add_mats(a, b, p, m):
    rows, cols = a.shape
    out = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = fadd(a[i, j], b[i, j], p, m)
    return out


def sub_mats(a, b, p, m):
    rows, cols = a.shape
    out = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = fsub(a[i, j], b[i, j], p, m)
    return out


def scale_mat(a, s, p, m, q, exp, log):
    rows, cols = a.shape
    out = np.empty((rows, cols), dtype=np.int64)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = fmul(a[i, j], s, p, m, q, exp, log)
    return out


if BACKEND == "numba":
    from numba import njit

    _jit = njit(cache=True)
    # Rebind module globals so the kernels, compiled lazily on first call,
    # resolve the scalar helpers to their compiled versions.
    fadd = _jit(fadd)
    fneg = _jit(fneg)
    fsub = _jit(fsub)
    fmul = _jit(fmul)
    finv = _jit(finv)
    rref = _jit(rref)
    det = _jit(det)
    matmul = _jit(matmul)
    add_mats = _jit(add_mats)
    sub_mats = _jit(sub_mats)
    scale_mat = _jit(scale_mat)


def warmup() -> None:
    """Trigger JIT compilation (no-op cost on the interpreted backend)."""
    a = np.array([[1, 0], [1, 1]], dtype=np.int64)
    exp = np.array([1, 2, 3], dtype=np.int64)
    log = np.array([0, 0, 1, 2], dtype=np.int64)
    for (p, m, q, e, l) in ((2, 1, 2, EMPTY_TABLE, EMPTY_TABLE), (2, 2, 4, exp, log)):
        rref(a.copy(), p, m, q, e, l)
        det(a.copy(), p, m, q, e, l)
        matmul(a, a, p, m, q, e, l)
        add_mats(a, a, p, m)
        sub_mats(a, a, p, m)
        scale_mat(a, 1, p, m, q, e, l)
