"""Pure-Python (numpy) counting kernels: fallback for the Cython core.

Same contract as the compiled `_kernels` module.  All arithmetic is int64
modular arithmetic over a prime field; `chi` is the precomputed quadratic
character table (int8, chi[0] = 0).
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def chi_table(p: int) -> np.ndarray:
    """Quadratic character table over F_p (p an odd prime)."""
    chi = np.full(p, -1, dtype=np.int8)
    chi[0] = 0
    x = np.arange(1, (p + 1) // 2, dtype=np.int64)
    chi[x * x % p] = 1
    return chi


def poly_char_sum(coeffs, p: int, chi: np.ndarray) -> int:
    """Sum of chi(F(x)) over x in F_p, F given low-to-high."""
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return int(chi[acc].sum(dtype=np.int64))


def ec_trace(a: int, b: int, p: int, chi: np.ndarray) -> int:
    """Sum of chi(x^3 + a x + b) over F_p; #E = p + 1 + ec_trace."""
    x = np.arange(p, dtype=np.int64)
    vals = (x * x % p * x + a * x + b) % p
    return int(chi[vals].sum(dtype=np.int64))


def branch_sweep(a: int, b: int, p: int, chi: np.ndarray) -> np.ndarray:
    """T[r] = sum_x chi((x^3 + a x + b) * (x - r)) for every r in F_p."""
    x = np.arange(p, dtype=np.int64)
    fv = (x * x % p * x + a * x + b) % p
    out = np.empty(p, dtype=np.int64)
    for r in range(p):
        out[r] = chi[fv * ((x - r) % p) % p].sum(dtype=np.int64)
    return out


def fifth_power_table(p: int) -> np.ndarray:
    """table[x] = 1 if x is a fifth power in F_p* (p = 1 mod 5), else 0;
    table[0] = 0."""
    t = np.zeros(p, dtype=np.int8)
    x = np.arange(1, p, dtype=np.int64)
    e = (p - 1) // 5
    pw = np.ones(p - 1, dtype=np.int64)
    base = x.copy()
    while e:
        if e & 1:
            pw = pw * base % p
        base = base * base % p
        e >>= 1
    t[x[pw == 1]] = 1
    return t
