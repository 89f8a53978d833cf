import random

import pytest

from optcurves.hermitian import (
    HermitianError,
    HermitianForm,
    QuadInt,
    conj_transpose,
    det_bareiss,
    det_leibniz,
    eval_postfix,
    group_closure,
    herm_validate,
    is_automorphism,
    mat,
    mat_identity,
    mat_mul,
    mat_neg,
    mat_pow,
    projection_degree,
    qi,
    verify_relations,
)

DS = (-3, -4, -7, -8, -11, -19)


def test_quadint_basic_identities():
    w = qi(-19, 0, 1)
    assert w * w == qi(-19, -5, 1)  # w^2 = w - 5 for d = -19
    assert (w - qi(-19, 2)).norm() == 7
    w11 = qi(-11, 0, 1)
    assert (w11 - qi(-11, 1)).conj() == qi(-11, 0, -1)
    w4 = qi(-4, 0, 1)
    assert w4 * w4 == qi(-4, -1)  # w = i for d = -4


@pytest.mark.parametrize("d", DS)
def test_quadint_ring_axioms_grid(d):
    grid = [qi(d, a, b) for a in range(-2, 3) for b in range(-2, 3)]
    for x in grid:
        assert (x.conj()).conj() == x
        assert x.norm() >= 0
        assert (x * x.conj()).is_rational
        for y in grid:
            assert x + y == y + x
            assert x * y == y * x
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x * y).norm() == x.norm() * y.norm()
            for z in grid[:5]:
                assert x * (y + z) == x * y + x * z
                assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("d", DS)
def test_exact_div_roundtrip(d, rng):
    for _ in range(40):
        x = qi(d, rng.randrange(-5, 6), rng.randrange(-5, 6))
        y = qi(d, rng.randrange(-5, 6), rng.randrange(-5, 6))
        if y.norm() == 0:
            continue
        prod = x * y
        assert prod.exact_div(y) == x
    with pytest.raises(HermitianError):
        qi(d, 1).exact_div(qi(d, 2))  # 1/2 is not integral


def test_mixed_discriminants_rejected():
    with pytest.raises(HermitianError):
        _ = qi(-19, 1, 1) + qi(-11, 1, 1)
    with pytest.raises(HermitianError):
        qi(-5, 1)


def test_int_interop():
    x = qi(-7, 2, 3)
    assert x + 1 == qi(-7, 3, 3)
    assert x * 2 == qi(-7, 4, 6)
    assert x - 2 == qi(-7, 0, 3)


@pytest.mark.parametrize("dim", (2, 3, 4))
def test_bareiss_vs_leibniz(dim, rng):
    for _ in range(20):
        M = tuple(
            tuple(qi(-19, rng.randrange(-3, 4), rng.randrange(-2, 3))
                  for _ in range(dim))
            for _ in range(dim)
        )
        assert det_bareiss(M) == det_leibniz(M)


def test_special_form_genus2():
    H = HermitianForm.from_lower(-11, [[2], [[0, -1], 2]])
    rep = herm_validate(H)
    assert rep.hermitian and rep.positive_definite and rep.det == 1
    assert projection_degree(H, 1) == 2
    assert projection_degree(H, 2) == 2


def test_special_form_genus3():
    H = HermitianForm.from_lower(-19, [[2], [1, 3], [-1, [-1, -1], 3]])
    rep = herm_validate(H)
    assert rep.hermitian and rep.positive_definite and rep.det == 1
    assert projection_degree(H, 1) == 2


def test_from_lower_mirrors_conjugates():
    H = HermitianForm.from_lower(-19, [[2], [[1, 1], 3]])
    assert H.gram[0][1] == H.gram[1][0].conj()


def test_identity_and_neg_identity_are_automorphisms():
    H = HermitianForm.from_lower(-11, [[2], [[0, -1], 2]])
    I = mat_identity(2, -11)
    assert is_automorphism(H, I)
    assert is_automorphism(H, mat_neg(I))


def test_perturbed_generator_is_not_automorphism():
    from optcurves.catalog import appendix_entries

    e = [x for x in appendix_entries() if x["name"] == "dim4_H9"][0]
    A = mat(e["generators"]["a3"], -19)
    H = HermitianForm.from_lower(-19, e["gram_lower"])
    assert is_automorphism(H, A)
    rows = [list(r) for r in A]
    rows[0][1] = rows[0][1] + 1
    assert not is_automorphism(H, tuple(tuple(r) for r in rows))


def test_eval_postfix():
    I = mat_identity(2, -11)
    A = mat([[0, 1], [-1, 0]], -11)
    env = {"a": A}
    assert eval_postfix("a 2 ^", env, 2, -11) == mat_mul(A, A)
    assert eval_postfix("a a *", env, 2, -11) == mat_mul(A, A)
    assert eval_postfix("-1", env, 2, -11) == mat_neg(I)
    assert eval_postfix("a 4 ^", env, 2, -11) == I
    with pytest.raises(HermitianError):
        eval_postfix("b", env, 2, -11)
    with pytest.raises(HermitianError):
        eval_postfix("a *", env, 2, -11)


def test_verify_relations():
    A = mat([[0, 1], [-1, 0]], -11)
    env = {"a": A}
    out = verify_relations([["a 4 ^", "1"], ["a 2 ^", "-1"], ["a 2 ^", "1"]],
                           env, 2, -11)
    assert out == [True, True, False]


def test_mat_pow():
    A = mat([[0, 1], [-1, 0]], -3)
    assert mat_pow(A, 4) == mat_identity(2, -3)
    assert mat_pow(A, 0) == mat_identity(2, -3)


def test_group_closure_klein_four():
    # sign flips on the rank-3 identity form; in rank 2 the two flips
    # differ by -I, so rank 3 is the smallest honest example
    H = HermitianForm.from_lower(-11, [[1], [0, 1], [0, 0, 1]])
    g1 = mat([[-1, 0, 0], [0, 1, 0], [0, 0, 1]], -11)
    g2 = mat([[1, 0, 0], [0, -1, 0], [0, 0, 1]], -11)
    rep = group_closure(H, [g1, g2])
    assert rep.order == 8
    assert rep.quotient_order == 4
    assert rep.has_klein_four
    assert not rep.has_order_5


def test_group_closure_no_klein_four_in_rank2_flips():
    H = HermitianForm.from_lower(-11, [[1], [0, 1]])
    g1 = mat([[-1, 0], [0, 1]], -11)
    g2 = mat([[1, 0], [0, -1]], -11)
    rep = group_closure(H, [g1, g2])
    assert rep.order == 4
    assert rep.quotient_order == 2
    assert not rep.has_klein_four


def test_group_closure_order_five_detected():
    # 5-cycle permutation matrix preserves the identity form
    H = HermitianForm.from_lower(-19, [[1], [0, 1], [0, 0, 1], [0, 0, 0, 1],
                                       [0, 0, 0, 0, 1]])
    P = [[0] * 5 for _ in range(5)]
    for i in range(5):
        P[i][(i + 1) % 5] = 1
    rep = group_closure(H, [mat(P, -19)])
    assert rep.has_order_5
    assert rep.order == 10  # <P> x {+-I}
    assert dict(rep.order_histogram)[5] == 4


def test_group_closure_rejects_non_automorphism():
    H = HermitianForm.from_lower(-11, [[2], [[0, -1], 2]])
    bad = mat([[1, 1], [0, 1]], -11)
    with pytest.raises(HermitianError):
        group_closure(H, [bad])


def test_conj_transpose():
    A = mat([[[1, 1], 2], [3, [0, -1]]], -19)
    B = conj_transpose(A)
    assert B[0][1] == qi(-19, 3)
    assert B[1][0] == qi(-19, 2)
    assert B[0][0] == qi(-19, 1, 1).conj()
