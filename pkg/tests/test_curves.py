import random

import pytest

from conftest import (
    brute_elliptic_count,
    brute_hyperelliptic_count,
    brute_superelliptic_count,
    odd_prime_powers,
    random_squarefree,
)
from optcurves import polys
from optcurves.curves import (
    CountResult,
    EllipticModel,
    HyperellipticModel,
    SingularModelError,
    SuperellipticModel,
    char_sum,
    ec_count,
    ec_isomorphic,
    ec_j_invariant,
    hyperelliptic_count,
    least_nonsquare,
    quadratic_twist,
    superelliptic_count,
    superelliptic_genus,
)
from optcurves.ff import UnsupportedCharacteristicError, field_for_q


def test_ec_count_brute_small(rng):
    for q in (3, 5, 7, 9, 11, 13, 25, 27):
        f = field_for_q(q)
        seen = 0
        for a in f.elements():
            for b in f.elements():
                try:
                    E = EllipticModel(f, a, b)
                except SingularModelError:
                    continue
                if seen % 7 == 0:  # sample to keep runtime down
                    assert ec_count(E).count == brute_elliptic_count(f, a, b)
                seen += 1


def test_hyperelliptic_parity_rule_at_infinity():
    f3 = field_for_q(3)
    # z^2 = x: odd degree, one point at infinity, q+1 points total
    H = HyperellipticModel(f3, (0, 1))
    assert hyperelliptic_count(H).count == 4
    # even degree: two branches at infinity iff lc is a square
    f7 = field_for_q(7)
    Hsq = HyperellipticModel(f7, polys.normalize([1, 1, 1]))
    assert hyperelliptic_count(Hsq).count == brute_hyperelliptic_count(
        f7, polys.normalize([1, 1, 1])
    )


def test_hyperelliptic_brute_random(rng):
    for q in odd_prime_powers(27):
        f = field_for_q(q)
        for _ in range(6):
            deg = rng.randrange(1, 7)
            F = random_squarefree(f, deg, rng)
            H = HyperellipticModel(f, F)
            assert hyperelliptic_count(H).count == brute_hyperelliptic_count(f, F)


def test_twist_sum_identity_exhaustive_q13():
    f = field_for_q(13)
    for a in f.elements():
        for b in f.elements():
            try:
                E = EllipticModel(f, a, b)
            except SingularModelError:
                continue
            T = quadratic_twist(E)
            assert ec_count(E).count + ec_count(T).count == 2 * (13 + 1)


def test_char_sum_definition():
    f = field_for_q(11)
    F = polys.normalize([3, 0, 1])
    expected = sum(f.chi(polys.evaluate(f, F, x)) for x in f.elements())
    assert char_sum(f, F) == expected


def test_superelliptic_count_shortcut_and_full(rng):
    # q != 1 mod 5: z -> z^5 is a bijection, every model counts q+1
    f47 = field_for_q(47)
    quad = polys.normalize([1, 1, 1])
    S = SuperellipticModel(f47, 1, ((quad, 1),))
    assert superelliptic_count(S).count == 47 + 1
    # q = 1 mod 5: compare against brute force
    f11 = field_for_q(11)
    for gamma in (1, 2):
        for nu in (1, 2):
            model = SuperellipticModel(
                f11, gamma, ((polys.normalize([1, 0, 1]), nu),)
            )
            assert superelliptic_count(model).count == brute_superelliptic_count(
                f11, model
            )


def test_superelliptic_brute_random_q11_q31(rng):
    for q in (11, 31):
        f = field_for_q(q)
        for _ in range(8):
            F1 = random_squarefree(f, 2, rng)
            model = SuperellipticModel(f, rng.randrange(1, q), ((F1, rng.randrange(1, 5)),))
            assert superelliptic_count(model).count == brute_superelliptic_count(f, model)


def test_superelliptic_genus():
    f11 = field_for_q(11)
    quad = polys.normalize([1, 0, 1])
    lin = polys.normalize([0, 1])
    # branch degree 3, not divisible by 5: B = 3 + 1, g = 2(4-2) = 4
    S = SuperellipticModel(f11, 1, ((lin, 1), (quad, 1)))
    assert superelliptic_genus(S) == 4
    # branch degree 5 = 0 mod 5, so infinity is unramified:
    # B = deg(lin) + deg(quad) = 3, g = 2(3-2) = 2
    S2 = SuperellipticModel(f11, 1, ((lin, 3), (quad, 1)))
    assert superelliptic_genus(S2) == 2


def test_j_invariant_and_isomorphism():
    f = field_for_q(23)
    E = EllipticModel(f, 1, 11)
    u = 2
    Eu = EllipticModel(f, f.mul(f.pow(u, 4), 1), f.mul(f.pow(u, 6), 11))
    assert ec_j_invariant(E) == ec_j_invariant(Eu)
    assert ec_isomorphic(E, Eu)
    T = quadratic_twist(E)
    assert ec_j_invariant(T) == ec_j_invariant(E)
    assert not ec_isomorphic(E, T)  # twist by a nonsquare is not isomorphic


def test_isomorphism_special_j():
    f = field_for_q(13)
    # j = 0 family: y^2 = x^3 + b; sextic twists
    E1 = EllipticModel(f, 0, 1)
    E2 = EllipticModel(f, 0, f.pow(2, 6))
    assert ec_isomorphic(E1, E2)
    # j = 1728 family: y^2 = x^3 + ax; quartic twists
    E3 = EllipticModel(f, 1, 0)
    E4 = EllipticModel(f, f.pow(2, 4), 0)
    assert ec_isomorphic(E3, E4)


def test_quadratic_twist_roundtrip():
    f = field_for_q(23)
    E = EllipticModel(f, 1, 11)
    u = least_nonsquare(f)
    assert f.chi(u) == -1
    T = quadratic_twist(E)
    TT = quadratic_twist(T)
    assert ec_isomorphic(E, TT)


def test_count_result_invariants():
    r = CountResult(count=33, q=23, g=1, m=9)
    assert r.count == 33
    with pytest.raises(AssertionError):
        CountResult(count=100, q=23, g=1, m=9)


def test_rejected_inputs():
    f4 = field_for_q(4)
    # char 2 counting is rejected
    with pytest.raises(UnsupportedCharacteristicError):
        hyperelliptic_count(HyperellipticModel(f4, (0, 1)))
    f7 = field_for_q(7)
    with pytest.raises(SingularModelError):
        EllipticModel(f7, 0, 0)
    with pytest.raises(ValueError):
        HyperellipticModel(f7, polys.normalize([0, 0, 1]))  # x^2 not squarefree


def test_char3_counting_allowed():
    f27 = field_for_q(27)
    E = EllipticModel(f27, f27.element((1, 0, 0)), f27.element((1, 1, 0)))
    c = ec_count(E)
    assert abs(c.count - 28) <= c.m
