"""Exact arithmetic over imaginary quadratic rings of integers and
verification of hermitian Gram matrices and their automorphism groups.

Elements are a + b*omega in the integral basis (1, omega), where
omega = (1 + sqrt(d))/2 for d = 1 mod 4 and omega = sqrt(d/4) for
d = 0 mod 4.  Everything is integer arithmetic; determinants use
fraction-free Bareiss elimination with a Leibniz-expansion cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .ff import SUPPORTED_DISCRIMINANTS


class HermitianError(ValueError):
    pass


@dataclass(frozen=True)
class QuadInt:
    """a + b*omega in the ring of integers of Q(sqrt(d))."""

    a: int
    b: int
    d: int

    def __post_init__(self):
        if self.d not in SUPPORTED_DISCRIMINANTS:
            raise HermitianError(f"unsupported discriminant {self.d}")

    def _check(self, other: "QuadInt"):
        if self.d != other.d:
            raise HermitianError(f"mixed discriminants {self.d} and {other.d}")

    def __add__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a + other, self.b, self.d)
        self._check(other)
        return QuadInt(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a - other, self.b, self.d)
        self._check(other)
        return QuadInt(self.a - other.a, self.b - other.b, self.d)

    def __neg__(self):
        return QuadInt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other, self.d)
        self._check(other)
        a, b, c, e = self.a, self.b, other.a, other.b
        if self.d % 4 == 1:
            # omega^2 = omega + (d-1)/4
            k = (self.d - 1) // 4
            return QuadInt(a * c + b * e * k, a * e + b * c + b * e, self.d)
        # omega^2 = d/4
        return QuadInt(a * c + b * e * (self.d // 4), a * e + b * c, self.d)

    __rmul__ = __mul__

    def conj(self) -> "QuadInt":
        if self.d % 4 == 1:
            # conj(omega) = 1 - omega
            return QuadInt(self.a + self.b, -self.b, self.d)
        return QuadInt(self.a, -self.b, self.d)

    def norm(self) -> int:
        n = self * self.conj()
        assert n.b == 0
        return n.a

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def exact_div(self, other: "QuadInt") -> "QuadInt":
        """self / other when other divides self exactly (raises otherwise)."""
        self._check(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in O_K")
        num = self * other.conj()
        if num.a % n or num.b % n:
            raise HermitianError(f"inexact division {self} / {other}")
        return QuadInt(num.a // n, num.b // n, self.d)

    def __repr__(self):
        return f"({self.a}{self.b:+d}w; d={self.d})"


def qi(d: int, a: int, b: int = 0) -> QuadInt:
    return QuadInt(a, b, d)


# -- matrices over O_K -----------------------------------------------------

OKMatrix = tuple  # tuple of tuples of QuadInt


def mat(entries, d: int) -> OKMatrix:
    """Build a matrix from [a, b] pairs (or ints) over discriminant d."""
    rows = []
    for row in entries:
        out = []
        for e in row:
            if isinstance(e, int):
                out.append(QuadInt(e, 0, d))
            else:
                out.append(QuadInt(e[0], e[1], d))
        rows.append(tuple(out))
    return tuple(rows)


def mat_identity(n: int, d: int) -> OKMatrix:
    return tuple(
        tuple(QuadInt(int(i == j), 0, d) for j in range(n)) for i in range(n)
    )


def mat_neg(A: OKMatrix) -> OKMatrix:
    return tuple(tuple(-x for x in row) for row in A)


def mat_mul(A: OKMatrix, B: OKMatrix) -> OKMatrix:
    n, k, m = len(A), len(B), len(B[0])
    if len(A[0]) != k:
        raise HermitianError("dimension mismatch in matrix product")
    return tuple(
        tuple(
            reduce(lambda s, t: s + t, (A[i][l] * B[l][j] for l in range(k)))
            for j in range(m)
        )
        for i in range(n)
    )


def mat_pow(A: OKMatrix, e: int) -> OKMatrix:
    if e < 0:
        raise HermitianError("negative matrix powers are not needed here")
    R = mat_identity(len(A), A[0][0].d)
    while e:
        if e & 1:
            R = mat_mul(R, A)
        A = mat_mul(A, A)
        e >>= 1
    return R


def conj_transpose(A: OKMatrix) -> OKMatrix:
    n, m = len(A), len(A[0])
    return tuple(tuple(A[i][j].conj() for i in range(n)) for j in range(m))


def det_bareiss(A: OKMatrix) -> QuadInt:
    """Fraction-free determinant over O_K (exact divisions only)."""
    n = len(A)
    d = A[0][0].d
    M = [list(row) for row in A]
    sign = 1
    prev = QuadInt(1, 0, d)
    for k in range(n - 1):
        if M[k][k] == QuadInt(0, 0, d):
            for r in range(k + 1, n):
                if M[r][k] != QuadInt(0, 0, d):
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return QuadInt(0, 0, d)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[k][k] * M[i][j] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


def det_leibniz(A: OKMatrix) -> QuadInt:
    """Permutation-expansion determinant; independent oracle for small n."""
    n = len(A)
    d = A[0][0].d
    total = QuadInt(0, 0, d)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = QuadInt(sign, 0, d)
        for i in range(n):
            term = term * A[i][perm[i]]
        total = total + term
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- hermitian forms -------------------------------------------------------


@dataclass(frozen=True)
class HermitianForm:
    dim: int
    gram: OKMatrix
    d: int

    @staticmethod
    def from_lower(d: int, rows) -> "HermitianForm":
        """Build from the lower-triangular presentation (entries [a, b] or
        ints); the upper triangle is the conjugate mirror."""
        n = len(rows)
        low = mat([list(r) + [0] * (n - len(r)) for r in rows], d)
        full = tuple(
            tuple(
                low[i][j] if i >= j else low[j][i].conj() for j in range(n)
            )
            for i in range(n)
        )
        return HermitianForm(dim=n, gram=full, d=d)


@dataclass(frozen=True)
class FormReport:
    hermitian: bool
    det: int | None  # rational integer value, None if not rational
    unimodular: bool
    positive_definite: bool


def herm_validate(H: HermitianForm) -> FormReport:
    G = H.gram
    n = H.dim
    hermitian = all(
        G[i][j] == G[j][i].conj() for i in range(n) for j in range(n)
    ) and all(G[i][i].is_rational and G[i][i].a > 0 for i in range(n))
    minors_positive = True
    for k in range(1, n + 1):
        sub = tuple(row[:k] for row in G[:k])
        dk = det_bareiss(sub)
        if not dk.is_rational or dk.a <= 0:
            minors_positive = False
    det = det_bareiss(G)
    det_val = det.a if det.is_rational else None
    return FormReport(
        hermitian=hermitian,
        det=det_val,
        unimodular=det_val == 1,
        positive_definite=hermitian and minors_positive,
    )


def projection_degree(H: HermitianForm, k: int) -> int:
    """Determinant of the principal minor deleting index k (1-based): the
    degree of the induced projection onto the k-th elliptic factor."""
    if not 1 <= k <= H.dim:
        raise HermitianError(f"index {k} out of range 1..{H.dim}")
    idx = [i for i in range(H.dim) if i != k - 1]
    sub = tuple(tuple(H.gram[i][j] for j in idx) for i in idx)
    if not sub:
        return 1
    det = det_bareiss(sub)
    if not det.is_rational:
        raise HermitianError("minor determinant not rational: form invalid")
    return det.a


def is_automorphism(H: HermitianForm, A: OKMatrix) -> bool:
    """True if A preserves the form: A H A* = H.

    Generators act on row vectors (the i-th row of A is the image of the
    i-th basis vector), matching how the catalog matrices are written.
    """
    if len(A) != H.dim or len(A[0]) != H.dim:
        raise HermitianError("dimension mismatch")
    return mat_mul(A, mat_mul(H.gram, conj_transpose(A))) == H.gram


# -- relations -------------------------------------------------------------


def eval_postfix(expr: str, env: dict[str, OKMatrix], dim: int, d: int) -> OKMatrix:
    """Evaluate a relation side: space-separated postfix over generator
    names, integer scalars (meaning scalar * identity), '*' and '^'."""
    stack: list = []

    def pop():
        if not stack:
            raise HermitianError(f"malformed relation expression: {expr!r}")
        return stack.pop()

    for tok in expr.split():
        if tok in env:
            stack.append(env[tok])
        elif tok == "*":
            b, a = pop(), pop()
            if isinstance(a, int) and isinstance(b, int):
                stack.append(a * b)
            elif isinstance(a, int):
                stack.append(tuple(tuple(x * a for x in row) for row in b))
            elif isinstance(b, int):
                stack.append(tuple(tuple(x * b for x in row) for row in a))
            else:
                stack.append(mat_mul(a, b))
        elif tok == "^":
            e, a = pop(), pop()
            if not isinstance(e, int) or isinstance(a, int):
                raise HermitianError(f"malformed power in relation: {expr!r}")
            stack.append(mat_pow(a, e))
        else:
            try:
                stack.append(int(tok))
            except ValueError:
                raise HermitianError(f"unknown token {tok!r} in relation") from None
    if len(stack) != 1:
        raise HermitianError(f"malformed relation expression: {expr!r}")
    out = stack[0]
    if isinstance(out, int):
        return tuple(
            tuple(QuadInt(out if i == j else 0, 0, d) for j in range(dim))
            for i in range(dim)
        )
    return out


def verify_relations(relations, env: dict[str, OKMatrix], dim: int, d: int) -> list[bool]:
    """Check each relation [lhs, rhs] by exact evaluation; one bool per
    relation, in order."""
    out = []
    for lhs, rhs in relations:
        out.append(
            eval_postfix(lhs, env, dim, d) == eval_postfix(rhs, env, dim, d)
        )
    return out


# -- group closure ---------------------------------------------------------


@dataclass(frozen=True)
class GroupClosureReport:
    order: int
    quotient_order: int
    has_klein_four: bool
    has_order_5: bool
    order_histogram: tuple[tuple[int, int], ...]  # (element order, count)


def _canonical_mod_pm(A: OKMatrix) -> OKMatrix:
    """Representative of {A, -A}: the lexicographically smaller flattening."""
    B = mat_neg(A)
    ka = tuple((x.a, x.b) for row in A for x in row)
    kb = tuple((x.a, x.b) for row in B for x in row)
    return A if ka <= kb else B


def _element_order(A: OKMatrix, identity: OKMatrix, cap: int = 10**4) -> int:
    P = A
    for k in range(1, cap + 1):
        if P == identity:
            return k
        P = mat_mul(P, A)
    raise HermitianError("element order exceeds cap")


def group_closure(H: HermitianForm, gens: list[OKMatrix], cap: int = 10**6) -> GroupClosureReport:
    """Breadth-first closure of <gens, -I>, its quotient mod {+-I}, and the
    subgroup flags the genus arguments rely on (Klein four, order 5)."""
    for g in gens:
        if not is_automorphism(H, g):
            raise HermitianError("generator is not an automorphism of the form")
    I = mat_identity(H.dim, H.d)
    gen_set = list(gens) + [mat_neg(I)]
    elements = {I}
    frontier = [I]
    while frontier:
        nxt = []
        for A in frontier:
            for g in gen_set:
                B = mat_mul(A, g)
                if B not in elements:
                    if len(elements) >= cap:
                        raise HermitianError("closure cap exceeded")
                    elements.add(B)
                    nxt.append(B)
        frontier = nxt
    quotient = {_canonical_mod_pm(A) for A in elements}
    # involutions in the quotient: A^2 = +-I, A != +-I
    ident_class = _canonical_mod_pm(I)
    invs = [
        A
        for A in quotient
        if A != ident_class and _canonical_mod_pm(mat_mul(A, A)) == ident_class
    ]
    klein = False
    for i in range(len(invs)):
        for j in range(i + 1, len(invs)):
            ab = _canonical_mod_pm(mat_mul(invs[i], invs[j]))
            ba = _canonical_mod_pm(mat_mul(invs[j], invs[i]))
            if ab == ba:
                klein = True
                break
        if klein:
            break
    has5 = any(_element_order(A, I) == 5 for A in elements)
    hist: dict[int, int] = {}
    for A in elements:
        o = _element_order(A, I)
        hist[o] = hist.get(o, 0) + 1
    return GroupClosureReport(
        order=len(elements),
        quotient_order=len(quotient),
        has_klein_four=klein,
        has_order_5=has5,
        order_histogram=tuple(sorted(hist.items())),
    )
