import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optcurves.ff import (
    SUPPORTED_DISCRIMINANTS,
    Field,
    FieldError,
    MixedFieldError,
    FieldElement,
    discriminant,
    enumerate_discriminant_fields,
    field_create,
    field_for_q,
    is_prime,
    prime_power_decompose,
)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(2, 50):
        assert is_prime(n) == (n in primes)


def test_prime_power_decompose():
    assert prime_power_decompose(49) == (7, 2)
    assert prime_power_decompose(243) == (3, 5)
    assert prime_power_decompose(23) == (23, 1)
    assert prime_power_decompose(12) is None
    assert prime_power_decompose(1) is None


def test_prime_field_matches_int_arithmetic(rng):
    f = field_for_q(101)
    for _ in range(200):
        x, y = rng.randrange(101), rng.randrange(101)
        assert f.add(x, y) == (x + y) % 101
        assert f.mul(x, y) == (x * y) % 101
        assert f.sub(x, y) == (x - y) % 101
    for x in range(1, 101):
        assert f.mul(x, f.inv(x)) == f.one


@pytest.mark.parametrize("p,n", [(5, 2), (7, 2), (3, 3)])
def test_extension_field_axioms(p, n, rng):
    f = field_create(p, n)
    els = list(f.elements())
    assert len(els) == p**n
    sample = [els[rng.randrange(len(els))] for _ in range(12)]
    for x in sample:
        for y in sample:
            assert f.add(x, y) == f.add(y, x)
            assert f.mul(x, y) == f.mul(y, x)
            for z in sample[:4]:
                assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    for x in els:
        if x != f.zero:
            assert f.mul(x, f.inv(x)) == f.one
        back = f.element(f.coeffs(x))
        assert back == x


def test_frobenius_fixed_field():
    # x -> x^p fixes exactly the prime subfield
    f = field_create(5, 2)
    fixed = [x for x in f.elements() if f.pow(x, 5) == x]
    assert len(fixed) == 5


def test_chi_values_match_euler_criterion():
    for q in (3, 5, 9, 13, 25, 49, 81):
        f = field_for_q(q)
        squares = {f.mul(x, x) for x in f.elements() if x != f.zero}
        for x in f.elements():
            if x == f.zero:
                assert f.chi(x) == 0
            else:
                assert f.chi(x) == (1 if x in squares else -1)


def test_chi_multiplicative_exhaustive_small():
    for q in (3, 5, 7, 9, 11, 13, 25, 27, 49):
        f = field_for_q(q)
        for x in f.elements():
            for y in f.elements():
                assert f.chi(f.mul(x, y)) == f.chi(x) * f.chi(y)


def test_quintic_class():
    f = field_for_q(61)  # 61 = 1 mod 5
    fifth_powers = {f.pow(x, 5) for x in f.elements() if x != f.zero}
    for x in f.elements():
        cls = f.quintic_class(x)
        if x == f.zero:
            assert cls is None
        elif x in fifth_powers:
            assert cls == 0
        else:
            assert cls in (1, 2, 3, 4)
    # q != 1 mod 5: classes are undefined (the power map is onto)
    g = field_for_q(47)
    with pytest.raises(FieldError):
        g.quintic_class(2)


def test_field_element_wrapper():
    f = field_for_q(7)
    a, b = FieldElement(f, 3), FieldElement(f, 5)
    assert (a + b).val == 1
    assert (a * b).val == 1
    assert (a - b).val == 5
    assert (-a).val == 4
    assert (a / b).val == f.mul(3, f.inv(5))
    g = field_for_q(11)
    with pytest.raises(MixedFieldError):
        _ = a + FieldElement(g, 1)


def test_characteristic_two_allowed_for_arithmetic():
    f = field_create(2, 3)
    assert len(list(f.elements())) == 8


def test_discriminant_examples():
    assert discriminant(23) == discriminant(23)
    r = discriminant(23)
    assert (r.m, r.d) == (9, -11)
    assert discriminant(563).d == -43
    assert discriminant(47).d == -19
    assert discriminant(97).d == -27
    assert discriminant(243).d == -11


def test_enumerate_d11_below_1e4():
    qs = [r.q for r in enumerate_discriminant_fields(-11, 10**4)]
    assert qs == [23, 59, 113, 243, 383, 509, 653, 1193, 1409, 3083, 4973, 6323, 8933]
    assert 563 not in qs


def test_enumerate_d19_below_150():
    qs = [r.q for r in enumerate_discriminant_fields(-19, 150)]
    assert qs == [47, 61, 137]


def test_enumerate_rejects_bad_inputs():
    with pytest.raises(FieldError):
        enumerate_discriminant_fields(-5, 100)
    with pytest.raises(FieldError):
        enumerate_discriminant_fields(-11, 2**33)


@given(st.integers(min_value=2, max_value=10**6))
@settings(max_examples=200)
def test_m_is_exact_integer_sqrt(q):
    if prime_power_decompose(q) is None:
        return
    r = discriminant(q)
    assert r.m == math.isqrt(4 * q)
    assert r.m**2 <= 4 * q < (r.m + 1) ** 2
    assert r.d == r.m**2 - 4 * q


def test_field_identity_cached():
    assert field_for_q(25) is field_for_q(25)
    assert field_create(5, 2) is field_for_q(25)
