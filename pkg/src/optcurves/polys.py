"""Dense univariate polynomial arithmetic over a Field.

Polynomials are tuples of encoded field elements, coefficients low-to-high,
with no trailing zeros (the zero polynomial is the empty tuple).  Only what
the curve machinery needs: ring ops, gcd, modular powering, squarefree
decomposition and full factorization (distinct-degree + Cantor-Zassenhaus
equal-degree splitting with a deterministic seed).
"""

from __future__ import annotations

import random
import zlib

from .ff import Field

Poly = tuple[int, ...]

_SEED_SALT = 0x5EED_CA57


def normalize(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1  # -1 for the zero polynomial


def constant(field: Field, c: int) -> Poly:
    return normalize([c % field.q if field.n == 1 else c])


def add(field: Field, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return normalize(out)


def sub(field: Field, f: Poly, g: Poly) -> Poly:
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = field.sub(out[i], c)
    return normalize(out)


def scale(field: Field, f: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return normalize([field.mul(a, c) for a in f])


def mul(field: Field, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(out)


def divmod_(field: Field, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    inv_lc = field.inv(g[-1])
    for k in range(len(f) - len(g), -1, -1):
        c = field.mul(r[k + len(g) - 1], inv_lc)
        if c:
            q[k] = c
            for i, b in enumerate(g):
                r[k + i] = field.sub(r[k + i], field.mul(c, b))
    return normalize(q), normalize(r)


def mod(field: Field, f: Poly, g: Poly) -> Poly:
    return divmod_(field, f, g)[1]


def monic(field: Field, f: Poly) -> Poly:
    if not f or f[-1] == field.one:
        return f
    return scale(field, f, field.inv(f[-1]))


def gcd(field: Field, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, mod(field, f, g)
    return monic(field, f)


def pow_mod(field: Field, f: Poly, e: int, m: Poly) -> Poly:
    r: Poly = (field.one,)
    f = mod(field, f, m)
    while e:
        if e & 1:
            r = mod(field, mul(field, r, f), m)
        f = mod(field, mul(field, f, f), m)
        e >>= 1
    return r


def evaluate(field: Field, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def derivative(field: Field, f: Poly) -> Poly:
    out = []
    for i in range(1, len(f)):
        c = f[i]
        s = 0
        for _ in range(i % field.p):
            s = field.add(s, c)
        out.append(s)
    return normalize(out)


def is_squarefree(field: Field, f: Poly) -> bool:
    return degree(gcd(field, f, derivative(field, f))) == 0


def is_irreducible(field: Field, f: Poly) -> bool:
    """Rabin test: x^(q^n) = x mod f and gcd(x^(q^k) - x, f) = 1 for
    proper prime-divisor steps k = n / r."""
    n = degree(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    q = field.q
    x: Poly = (0, field.one)
    from .ff import _factorize

    for r in _factorize(n):
        h = _frobenius_power(field, f, n // r)
        if degree(gcd(field, sub(field, h, x), f)) != 0:
            return False
    h = _frobenius_power(field, f, n)
    return sub(field, h, x) == ()


def _frobenius_power(field: Field, f: Poly, k: int) -> Poly:
    """x^(q^k) mod f by repeated q-th powering."""
    h: Poly = (0, field.one)
    for _ in range(k):
        h = pow_mod(field, h, field.q, f)
    return h


def roots(field: Field, f: Poly) -> list[int]:
    return [x for x in field.elements() if evaluate(field, f, x) == 0]


def _rng_for(field: Field, f: Poly) -> random.Random:
    data = repr((field.p, field.n, f)).encode()
    return random.Random(_SEED_SALT ^ zlib.crc32(data))


def squarefree_decomposition(field: Field, f: Poly) -> list[tuple[Poly, int]]:
    """Yun-style decomposition into (squarefree factor, multiplicity) pairs.

    Handles the p-th power fallback; inputs here have degree <= 6, far below
    any pathological regime.
    """
    out = []
    f = monic(field, f)
    mult = 1
    while degree(f) > 0:
        d = derivative(field, f)
        if d == ():
            # f is a p-th power: f(x) = g(x^p); q = p^n so coefficient
            # p-th roots are x -> x^(q/p)
            g = []
            for i in range(0, len(f), field.p):
                g.append(field.pow(f[i], field.q // field.p))
            f = tuple(g)
            mult *= field.p
            continue
        c = gcd(field, f, d)
        w = divmod_(field, f, c)[0]
        i = 1
        while degree(w) > 0:
            y = gcd(field, w, c)
            z = divmod_(field, w, y)[0]
            if degree(z) > 0:
                out.append((z, i * mult))
            w = y
            c = divmod_(field, c, y)[0]
            i += 1
        f = c
    return out


def _distinct_degree(field: Field, f: Poly) -> list[tuple[Poly, int]]:
    out = []
    h: Poly = (0, field.one)
    x: Poly = (0, field.one)
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = pow_mod(field, h, field.q, f)
        g = gcd(field, sub(field, h, x), f)
        if degree(g) > 0:
            out.append((g, d))
            f = divmod_(field, f, g)[0]
            h = mod(field, h, f)
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out


def _equal_degree_split(field: Field, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: split a product of degree-d irreducibles (odd q)."""
    n = degree(f)
    if n == d:
        return [f]
    while True:
        a = normalize([rng.randrange(field.q) for _ in range(n)])
        if degree(a) < 1:
            continue
        g = gcd(field, a, f)
        if 0 < degree(g) < n:
            pieces = [g, divmod_(field, f, g)[0]]
        else:
            b = pow_mod(field, a, (field.q**d - 1) // 2, f)
            g = gcd(field, sub(field, b, (field.one,)), f)
            if 0 < degree(g) < n:
                pieces = [g, divmod_(field, f, g)[0]]
            else:
                continue
        out = []
        for piece in pieces:
            out.extend(_equal_degree_split(field, piece, d, rng))
        return out


def factor(field: Field, f: Poly) -> tuple[int, list[tuple[Poly, int]]]:
    """Complete factorization: leading constant and sorted monic factors.

    Deterministic: the equal-degree splitting RNG is seeded from the input
    polynomial, so identical inputs factor identically across runs.
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if field.q % 2 == 0:
        raise ValueError("factorization implemented for odd q only")
    lc = f[-1]
    f = monic(field, f)
    rng = _rng_for(field, f)
    found: dict[Poly, int] = {}
    for sqf, mult in squarefree_decomposition(field, f):
        for prod, d in _distinct_degree(field, sqf):
            for irr in _equal_degree_split(field, prod, d, rng):
                irr = monic(field, irr)
                found[irr] = found.get(irr, 0) + mult
    factors = sorted(found.items())
    return lc, factors
