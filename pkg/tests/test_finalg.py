from fractions import Fraction

import pytest

from quasihopf.corpus import group_algebra_z2, sweedler4
from quasihopf.fields import GF, QQ
from quasihopf.finalg import (FinAlgebra, Report, VerificationError,
                              algebra_from_pair_fn, check_algebra_map,
                              invert_element, opposite, tensor_algebra,
                              tensor_power, verify_associative_unital)
from quasihopf.linalg import Mat
from quasihopf.tensors import TensorElt


def z2():
    return group_algebra_z2().H


def h4():
    return sweedler4().H


def test_report_accumulates():
    rep = Report()
    assert rep.ok
    rep.check(True, "fine")
    assert rep.ok
    rep.check(False, "broken", "detail")
    assert not rep.ok
    assert rep.failures == ["broken: detail"]
    with pytest.raises(VerificationError):
        rep.require("context")


def test_multiply_and_elements():
    A = h4()
    g, x = A.basis_element(2), A.basis_element(1)
    assert g * g == A.one()
    assert x * x == A.zero()
    # xg = -gx
    gx = A.basis_element(3)
    assert x * g == gx.scale(Fraction(-1))


def test_verify_flags_broken_unit():
    A = z2()
    bad = FinAlgebra(QQ, A.mul, [Fraction(0), Fraction(1)], check=False)
    rep = verify_associative_unital(bad)
    assert not rep.ok
    assert any("unit" in f for f in rep.failures)


def test_verify_flags_nonassociative():
    one, zero = Fraction(1), Fraction(0)
    mul = [[[zero, one], [one, zero]], [[one, zero], [one, zero]]]
    bad = FinAlgebra(QQ, mul, [one, zero], check=False)
    assert not verify_associative_unital(bad).ok


def test_opposite():
    A = h4()
    Aop = opposite(A)
    assert verify_associative_unital(Aop).ok
    for i in range(4):
        for j in range(4):
            assert (Aop.mul[i][j] == A.mul[j][i])
    # xg = -gx distinguishes A from Aop
    assert Aop.mul != A.mul


def test_tensor_algebra_and_power():
    A, B = z2(), h4()
    T = tensor_algebra(A, B)
    assert T.dim == 8
    assert verify_associative_unital(T).ok
    # (a x b)(a' x b') = aa' x bb' on basis pairs
    for i in range(2):
        for j in range(4):
            for k in range(2):
                for l in range(4):
                    lhs = T.multiply(
                        TensorElt.basis(QQ, (2, 4), (i, j))
                        .merge_slots((2,)).to_flat(),
                        TensorElt.basis(QQ, (2, 4), (k, l))
                        .merge_slots((2,)).to_flat())
                    a = A.multiply(A.basis_element(i).coords,
                                   A.basis_element(k).coords)
                    b = B.multiply(B.basis_element(j).coords,
                                   B.basis_element(l).coords)
                    want = TensorElt.from_flat(QQ, (2,), a).tensor(
                        TensorElt.from_flat(QQ, (4,), b))
                    assert list(lhs) == list(want.merge_slots((2,)).to_flat())
    sq = tensor_power(A, 2)
    assert sq.dim == 4
    assert verify_associative_unital(sq).ok


def test_invert_element():
    A = z2()
    g = A.basis_element(1)
    inv = invert_element(A, g)
    assert inv * g == A.one()
    x = h4().basis_element(1)
    assert invert_element(h4(), x) is None


def test_check_algebra_map():
    A = h4()
    ident = Mat.identity(QQ, 4)
    assert check_algebra_map(ident, A, A, anti=False, unital=True).ok
    S = sweedler4().S.mat
    # the antipode is an anti-map, not a map (xg != gx in H4)
    assert check_algebra_map(S, A, A, anti=True, unital=True).ok
    assert not check_algebra_map(S, A, A, anti=False, unital=True).ok


def test_algebra_from_pair_fn():
    A = z2()

    def pair(idx_i, idx_j):
        return TensorElt.basis(QQ, (2,), ((idx_i[0] + idx_j[0]) % 2,))

    alg = algebra_from_pair_fn(QQ, (2,), pair,
                               TensorElt.basis(QQ, (2,), (0,)), check=True)
    assert alg.mul == A.mul


def test_prime_field_algebra():
    F = GF(5)
    one, zero = F.one(), F.zero()
    mul = [[[one if k == (i + j) % 3 else zero for k in range(3)]
            for j in range(3)] for i in range(3)]
    A = FinAlgebra(F, mul, [one, zero, zero], check=True)
    assert verify_associative_unital(A).ok
