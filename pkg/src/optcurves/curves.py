"""Curve models over F_q and exact point counting.

Counts are for the smooth projective model throughout.  Elliptic counts use
the quadratic-character sum q + 1 + sum chi(x^3+ax+b); hyperelliptic
z^2 = F(x) adds 1 point at infinity for odd deg F and 1 + chi(lc F) for
even deg F; superelliptic z^5 = g(x) uses the fifth-power fiber rule.

Prime fields go through the fast kernels; extension fields through the
generic element loop.  Even characteristic is rejected outright rather than
miscounted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels, polys
from .ff import Field, UnsupportedCharacteristicError, discriminant
from .polys import Poly

MAXIMAL = "maximal"
MINIMAL = "minimal"
NEITHER = "neither"


class SingularModelError(ValueError):
    pass


_chi_cache: dict[int, np.ndarray] = {}


def chi_np(p: int) -> np.ndarray:
    """Cached quadratic-character table for a prime field, kernel-built."""
    t = _chi_cache.get(p)
    if t is None:
        t = kernels.chi_table(p)
        _chi_cache[p] = t
    return t


def _require_odd(f: Field):
    if f.p == 2:
        raise UnsupportedCharacteristicError("point counting needs odd characteristic")


@dataclass(frozen=True)
class CountResult:
    count: int
    q: int
    g: int
    m: int

    def __post_init__(self):
        # Hasse-Weil-Serre; a violation means a counting bug, not bad input
        assert abs(self.count - self.q - 1) <= self.g * self.m, (
            f"HWS violated: count={self.count} q={self.q} g={self.g} m={self.m}"
        )

    @property
    def defect_max(self) -> int:
        return self.q + 1 + self.g * self.m - self.count

    @property
    def defect_min(self) -> int:
        return self.count - (self.q + 1 - self.g * self.m)


def is_optimal(c: CountResult) -> str:
    if c.defect_max == 0:
        return MAXIMAL
    if c.defect_min == 0:
        return MINIMAL
    return NEITHER


def _mk_result(field: Field, count: int, g: int) -> CountResult:
    return CountResult(count=count, q=field.q, g=g, m=discriminant(field.q).m)


@dataclass(frozen=True)
class EllipticModel:
    """y^2 = x^3 + a x + b, short Weierstrass."""

    field: Field
    a: int
    b: int

    def __post_init__(self):
        f = self.field
        disc = f.add(
            f.mul(f.element(4), f.pow(self.a, 3)),
            f.mul(f.element(27), f.pow(self.b, 2)),
        )
        if disc == 0:
            raise SingularModelError(f"singular model a={self.a} b={self.b} over {f}")

    def rhs(self) -> Poly:
        return polys.normalize([self.b, self.a, 0, 1])


@dataclass(frozen=True)
class HyperellipticModel:
    """z^2 = F(x), 1 <= deg F <= 6, F squarefree."""

    field: Field
    F: Poly

    def __post_init__(self):
        if not 1 <= polys.degree(self.F) <= 6:
            raise ValueError(f"deg F = {polys.degree(self.F)} out of range")
        _require_odd(self.field)
        if not polys.is_squarefree(self.field, self.F):
            raise ValueError("F must be squarefree")

    @property
    def genus(self) -> int:
        return (polys.degree(self.F) - 1) // 2


@dataclass(frozen=True)
class SuperellipticModel:
    """z^5 = gamma * prod f_i(x)^{nu_i}, exponents in 1..4."""

    field: Field
    gamma: int
    factors: tuple[tuple[Poly, int], ...]

    def __post_init__(self):
        if self.gamma == 0:
            raise ValueError("gamma must be nonzero")
        fld = self.field
        for f, nu in self.factors:
            if not 1 <= nu <= 4:
                raise ValueError(f"exponent {nu} out of range")
            if not polys.is_squarefree(fld, f):
                raise ValueError("branch polynomials must be squarefree")
        for i, (f, _) in enumerate(self.factors):
            for g, _ in self.factors[i + 1 :]:
                if polys.degree(polys.gcd(fld, f, g)) != 0:
                    raise ValueError("branch polynomials must be pairwise coprime")

    def rhs(self) -> Poly:
        out = polys.constant(self.field, self.gamma)
        for f, nu in self.factors:
            for _ in range(nu):
                out = polys.mul(self.field, out, f)
        return out

    @property
    def branch_degree(self) -> int:
        return sum(nu * polys.degree(f) for f, nu in self.factors)


def ec_count(E: EllipticModel) -> CountResult:
    f = E.field
    _require_odd(f)
    if f.n == 1:
        s = kernels.ec_trace(E.a, E.b, f.p, chi_np(f.p))
    else:
        chi = f.chi_table()
        s = sum(chi[polys.evaluate(f, E.rhs(), x)] for x in f.elements())
    return _mk_result(f, f.q + 1 + s, 1)


def char_sum(field: Field, F: Poly) -> int:
    """sum_x chi(F(x)), the affine character sum behind every even count."""
    if field.n == 1:
        return kernels.poly_char_sum(F, field.p, chi_np(field.p))
    chi = field.chi_table()
    return sum(chi[polys.evaluate(field, F, x)] for x in field.elements())


def _infinity_points_sqrt(field: Field, F: Poly) -> int:
    if polys.degree(F) % 2 == 1:
        return 1
    return 1 + field.chi(F[-1])


def hyperelliptic_count(H: HyperellipticModel) -> CountResult:
    f = H.field
    count = f.q + char_sum(f, H.F) + _infinity_points_sqrt(f, H.F)
    return _mk_result(f, count, H.genus)


def _quintic_fiber(field: Field, fifth_ok, c: int) -> int:
    if c == 0:
        return 1
    if field.q % 5 != 1:
        return 1  # z -> z^5 is a bijection
    return 5 if fifth_ok(c) else 0


def superelliptic_count(S: SuperellipticModel) -> CountResult:
    f = S.field
    _require_odd(f)
    rhs = S.rhs()
    if f.n == 1 and f.q % 5 == 1:
        tab = kernels.fifth_power_table(f.p)
        fifth_ok = lambda c: bool(tab[c])
    elif f.q % 5 == 1:
        fifth_ok = lambda c: f.pow(c, (f.q - 1) // 5) == f.one
    else:
        fifth_ok = None
    count = 0
    if f.n == 1:
        x = np.arange(f.p, dtype=np.int64)
        vals = np.zeros(f.p, dtype=np.int64)
        for c in reversed(rhs):
            vals = (vals * x + c) % f.p
        if f.q % 5 == 1:
            fib = np.where(tab[vals] == 1, 5, 0)
            fib[vals == 0] = 1
            count = int(fib.sum())
        else:
            count = f.p
    else:
        for x in f.elements():
            count += _quintic_fiber(f, fifth_ok, polys.evaluate(f, rhs, x))
    # points over infinity
    if S.branch_degree % 5 != 0:
        count += 1  # totally ramified
    else:
        count += _quintic_fiber(f, fifth_ok, rhs[-1])
    return _mk_result(f, count, superelliptic_genus(S))


def superelliptic_genus(S: SuperellipticModel) -> int:
    """Riemann-Hurwitz for the degree-5 cyclic cover: every branch point is
    totally ramified since gcd(nu, 5) = 1, so g = (5-1)(B-2)/2."""
    B = sum(polys.degree(f) for f, _ in S.factors)
    if S.branch_degree % 5 != 0:
        B += 1
    return 2 * (B - 2)


def poly_factor(field: Field, F: Poly):
    """Complete factorization over F_q; see polys.factor."""
    return polys.factor(field, F)


def ec_j_invariant(E: EllipticModel) -> int:
    f = E.field
    if f.p in (2, 3):
        raise UnsupportedCharacteristicError("j-invariant formula needs p > 3")
    a3 = f.mul(f.element(4), f.pow(E.a, 3))
    den = f.add(a3, f.mul(f.element(27), f.pow(E.b, 2)))
    return f.mul(f.element(1728), f.mul(a3, f.inv(den)))


def quadratic_twist(E: EllipticModel, u: int | None = None) -> EllipticModel:
    f = E.field
    if u is None:
        u = least_nonsquare(f)
    return EllipticModel(f, f.mul(f.mul(u, u), E.a), f.mul(f.mul(u, f.mul(u, u)), E.b))


def least_nonsquare(field: Field) -> int:
    for u in field.elements():
        if field.chi(u) == -1:
            return u
    raise UnsupportedCharacteristicError("no nonsquare: even q")


def ec_isomorphic(E1: EllipticModel, E2: EllipticModel) -> bool:
    """F_q-isomorphism test: equal j and equal count, which is complete for
    j not in {0, 1728}; for special j fall back to the explicit twist scan
    (a2, b2) = (u^4 a1, u^6 b1)."""
    if E1.field != E2.field:
        return False
    f = E1.field
    j1, j2 = ec_j_invariant(E1), ec_j_invariant(E2)
    if j1 != j2:
        return False
    if j1 in (f.zero, f.element(1728)):
        for u in f.elements():
            if u == 0:
                continue
            u4 = f.pow(u, 4)
            if f.mul(u4, E1.a) == E2.a and f.mul(f.mul(u4, f.mul(u, u)), E1.b) == E2.b:
                return True
        return False
    return ec_count(E1).count == ec_count(E2).count
