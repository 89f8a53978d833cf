# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels: the hot inner loops of the curve sweeps.

Mirrors the contract of `_kernels_py`; selected at import by
`optcurves.kernels` when the extension is built.
"""

import numpy as np

from libc.stdint cimport int64_t, int8_t

BACKEND = "cython"


def chi_table(int64_t p):
    out = np.full(p, -1, dtype=np.int8)
    cdef int8_t[::1] chi = out
    cdef int64_t x
    chi[0] = 0
    for x in range(1, (p + 1) // 2):
        chi[x * x % p] = 1
    return out


def poly_char_sum(coeffs, int64_t p, int8_t[::1] chi):
    cdef int64_t cbuf[16]
    cdef int deg = len(coeffs) - 1
    if deg >= 16:
        raise ValueError("polynomial degree too large for the kernel")
    cdef int i
    for i in range(deg + 1):
        cbuf[i] = coeffs[i] % p
    cdef int64_t x, acc, s = 0
    for x in range(p):
        acc = 0
        for i in range(deg, -1, -1):
            acc = (acc * x + cbuf[i]) % p
        s += chi[acc]
    return s


def ec_trace(int64_t a, int64_t b, int64_t p, int8_t[::1] chi):
    cdef int64_t x, v, s = 0
    a %= p
    b %= p
    for x in range(p):
        v = (x * x % p * x + a * x + b) % p
        s += chi[v]
    return s


def branch_sweep(int64_t a, int64_t b, int64_t p, int8_t[::1] chi):
    fvn = np.empty(p, dtype=np.int64)
    outn = np.empty(p, dtype=np.int64)
    cdef int64_t[::1] fv = fvn
    cdef int64_t[::1] out = outn
    cdef int64_t x, r, s
    a %= p
    b %= p
    for x in range(p):
        fv[x] = (x * x % p * x + a * x + b) % p
    for r in range(p):
        s = 0
        for x in range(p):
            s += chi[fv[x] * ((x - r) % p + p) % p]
        out[r] = s
    return outn


def fifth_power_table(int64_t p):
    outn = np.zeros(p, dtype=np.int8)
    cdef int8_t[::1] out = outn
    cdef int64_t x, e, b, r
    cdef int64_t e0 = (p - 1) // 5
    for x in range(1, p):
        e = e0
        b = x
        r = 1
        while e:
            if e & 1:
                r = r * b % p
            b = b * b % p
            e >>= 1
        if r == 1:
            out[x] = 1
    return outn
