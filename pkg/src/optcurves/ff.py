"""Exact arithmetic in F_q and field enumeration by discriminant.

Fields are either prime (n = 1, elements are residues mod p) or extension
fields in a polynomial basis over F_p with a deterministically chosen
modulus.  Elements are encoded as integers in [0, q): for n = 1 the residue
itself, for n > 1 the coefficient vector packed in base p (lowest
coefficient = least significant digit).  All arithmetic is exact integer
arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

SUPPORTED_DISCRIMINANTS = (-3, -4, -7, -8, -11, -19)

Q_MAX = 2**32


class FieldError(ValueError):
    pass


class MixedFieldError(FieldError):
    """Operands belong to different fields."""


class UnsupportedCharacteristicError(FieldError):
    """Operation not defined in this characteristic."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3,317,044,064,679,887,385,961,981."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """Return (p, n) with q = p**n, or None if q is not a prime power."""
    if q < 2:
        return None
    if is_prime(q):
        return (q, 1)
    for n in range(2, q.bit_length() + 1):
        r = _iroot(q, n)
        if r**n == q and is_prime(r):
            return (r, n)
    return None


def _iroot(x: int, k: int) -> int:
    """Integer k-th root (floor), Newton on integers."""
    if x < 2:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


class Field:
    """A finite field F_q, q = p**n < 2**32.

    Immutable after construction; safe to share across workers.  The
    extension modulus is the lexicographically least monic irreducible
    polynomial of degree n (coefficients compared low-to-high), so fields
    are reproducible bit-for-bit.
    """

    def __init__(self, p: int, n: int = 1):
        if n < 1:
            raise FieldError(f"extension degree must be >= 1, got {n}")
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        q = p**n
        if q >= Q_MAX:
            raise FieldError(f"q = {p}^{n} exceeds the 2^32 cap")
        self.p = p
        self.n = n
        self.q = q
        self.modulus: tuple[int, ...] | None = None
        if n > 1:
            self.modulus = _least_irreducible(p, n)
            # x^n = -(low part of modulus), precomputed as coefficient vector
            self._red = tuple((-c) % p for c in self.modulus[:-1])
        self._chi = None
        self._quintic = None

    # -- element encoding -------------------------------------------------

    def element(self, coeffs) -> int:
        """Pack a coefficient vector (low-to-high) into an element."""
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        if len(coeffs) > self.n:
            raise FieldError("coefficient vector longer than extension degree")
        x = 0
        for c in reversed([c % self.p for c in coeffs]):
            x = x * self.p + c
        return x

    def coeffs(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def elements(self):
        return range(self.q)

    # -- arithmetic on encoded elements -----------------------------------

    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        p = self.p
        z = 0
        mul = 1
        for _ in range(self.n):
            z += ((x + y) % p) * mul
            x //= p
            y //= p
            mul *= p
        return z

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def neg(self, x: int) -> int:
        if self.n == 1:
            return -x % self.p
        p = self.p
        z = 0
        mul = 1
        for _ in range(self.n):
            z += (-x % p) * mul
            x //= p
            mul *= p
        return z

    def mul(self, x: int, y: int) -> int:
        if self.n == 1:
            return x * y % self.p
        p, n = self.p, self.n
        a = self.coeffs(x)
        b = self.coeffs(y)
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        # reduce degree >= n terms using x^n = red
        red = self._red
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for i, ri in enumerate(red):
                    prod[k - n + i] += c * ri
            prod[k] = 0
        z = 0
        mul = 1
        for c in prod[:n]:
            z += (c % p) * mul
            mul *= p
        return z

    def pow(self, x: int, e: int) -> int:
        if self.n == 1:
            return pow(x, e, self.p) if e >= 0 else pow(self.inv(x), -e, self.p)
        if e < 0:
            x, e = self.inv(x), -e
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.n == 1:
            return pow(x, -1, self.p)
        # x^(q-2); q is small enough that this is fine
        return self.pow(x, self.q - 2)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- characters --------------------------------------------------------

    def chi_table(self):
        """Quadratic character of every element, as a list indexed by element.

        chi[0] = 0; chi[x] = +1 for nonzero squares, -1 otherwise.  Built
        once and cached; counting kernels index into it.
        """
        if self.q % 2 == 0:
            raise UnsupportedCharacteristicError("quadratic character needs odd q")
        if self._chi is None:
            chi = [-1] * self.q
            chi[0] = 0
            if self.n == 1:
                p = self.p
                for x in range(1, (p + 1) // 2):
                    chi[x * x % p] = 1
            else:
                for x in range(1, self.q):
                    chi[self.mul(x, x)] = 1
            self._chi = chi
        return self._chi

    def chi(self, x: int) -> int:
        return self.chi_table()[x]

    def quintic_class(self, x: int) -> int | None:
        """Class of x in F_q* / (F_q*)^5, as an index in 0..4; None for x = 0.

        Requires q = 1 mod 5.  Index k means x^((q-1)/5) equals zeta^k for
        the fixed fifth root of unity zeta = g^((q-1)/5), g the least
        generator of F_q*.
        """
        if self.q % 5 != 1:
            raise FieldError(f"q = {self.q} is not 1 mod 5")
        if x == 0:
            return None
        if self._quintic is None:
            g = self._least_generator()
            zeta = self.pow(g, (self.q - 1) // 5)
            table = {self.one: 0}
            z = zeta
            for k in range(1, 5):
                table[z] = k
                z = self.mul(z, zeta)
            self._quintic = table
        return self._quintic[self.pow(x, (self.q - 1) // 5)]

    def _least_generator(self) -> int:
        order = self.q - 1
        fac = _factorize(order)
        for g in range(2, self.q):
            if all(self.pow(g, order // r) != self.one for r in fac):
                return g
        raise AssertionError("no generator found")  # pragma: no cover

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        if self.n == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.n}"


def _factorize(n: int) -> list[int]:
    """Distinct prime factors by trial division (n < 2**32)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def field_create(p: int, n: int = 1) -> Field:
    return Field(p, n)


def field_for_q(q: int) -> Field:
    pp = prime_power_decompose(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    return field_create(*pp)


def _least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n over F_p.

    Coefficient vectors (c0, ..., c_{n-1}) are scanned in lexicographic
    order, low coefficient most significant in the comparison.
    """
    from . import polys  # deferred to avoid a cycle

    fp = Field(p, 1)
    for idx in range(p**n):
        c = []
        k = idx
        for _ in range(n):
            c.append(k % p)
            k //= p
        f = tuple(c) + (1,)
        if polys.is_irreducible(fp, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldElement:
    """Thin value wrapper pairing an element with its field.

    Arithmetic between elements of different fields raises; the raw
    int encoding is on `.val` for the fast paths.
    """

    field: Field
    val: int

    def _check(self, other: "FieldElement"):
        if self.field != other.field:
            raise MixedFieldError(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.add(self.val, other.val))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.val, other.val))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.val, other.val))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.val, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.val))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inv()

    @property
    def coeffs(self):
        return self.field.coeffs(self.val)


def quadratic_character(field: Field, x: int) -> int:
    return field.chi(x)


def quintic_class(field: Field, x: int) -> int | None:
    return field.quintic_class(x)


# -- discriminants ---------------------------------------------------------


@dataclass(frozen=True)
class DiscriminantRecord:
    q: int
    p: int
    n: int
    m: int
    d: int

    def __post_init__(self):
        assert self.m**2 <= 4 * self.q < (self.m + 1) ** 2
        assert self.d == self.m**2 - 4 * self.q


def discriminant(q: int) -> DiscriminantRecord:
    """m = floor(2 sqrt(q)) and d = m^2 - 4q for a prime power q."""
    pp = prime_power_decompose(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    m = math.isqrt(4 * q)
    return DiscriminantRecord(q=q, p=pp[0], n=pp[1], m=m, d=m * m - 4 * q)


def enumerate_discriminant_fields(d: int, q_max: int) -> list[DiscriminantRecord]:
    """All prime powers q <= q_max with discriminant d, ascending.

    Candidates come from 4q = m^2 + |d|, so the scan is over m, not q;
    proper prime powers p^n (n > 1) are kept when they occur.
    """
    if d not in SUPPORTED_DISCRIMINANTS:
        raise FieldError(f"unsupported discriminant {d}")
    if q_max > Q_MAX:
        raise FieldError(f"q_max exceeds the 2^32 cap")
    out = []
    m = 1
    while m * m + abs(d) <= 4 * q_max:
        num = m * m + abs(d)
        if num % 4 == 0:
            q = num // 4
            if q >= 2 and math.isqrt(4 * q) == m and prime_power_decompose(q):
                rec = discriminant(q)
                if rec.d == d:
                    out.append(rec)
        m += 1
    return out
