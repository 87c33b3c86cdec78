from fractions import Fraction

import pytest

from quasihopf.corpus import (cyclic_with_cocycle, group_algebra_z2, sweedler4,
                              twisted_z2)
from quasihopf.fields import QQ
from quasihopf.quasihopf import tensor_qh
from quasihopf.tensors import TensorElt

from conftest import entry

ALL = ["QZ2", "H2", "Sweedler4", "FpZn(7,3)", "FpZn(5,2)"]
HOPF = ["QZ2", "Sweedler4"]


@pytest.mark.parametrize("name", ALL)
def test_axioms(name):
    entry(name)["H"].verify().require(name)


@pytest.mark.parametrize("name", ALL)
def test_canonical_elements(name):
    entry(name)["H"].verify_canonical().require(name)


@pytest.mark.parametrize("name", ALL)
def test_drinfeld_identities(name):
    entry(name)["H"].verify_drinfeld().require(name)


@pytest.mark.parametrize("name", HOPF)
def test_hopf_case_has_trivial_twist_data(name):
    # for a coassociative coproduct the associator is 1x1x1, the
    # canonical twist collapses to 1x1 and q_R = p_R = 1x1, even when
    # the antipode has order four
    Hq = entry(name)["H"]
    assert Hq.Phi == Hq.unit_elt(3)
    dt = Hq.drinfeld_twist()
    one2 = Hq.unit_elt(2)
    assert dt.f == one2
    assert dt.f_inv == one2
    assert Hq.canonical_qR() == one2
    assert Hq.canonical_pR() == one2


def test_twisted_z2_associator_matches_projector_formula():
    # 1x1x1 - 2 pxpxp with p = (1-g)/2, built here independently
    Hq = twisted_z2()
    one = TensorElt.from_vector(QQ, [Fraction(1), Fraction(0)])
    g = TensorElt.from_vector(QQ, [Fraction(0), Fraction(1)])
    p = (one - g).scale(Fraction(1, 2))
    want = one.tensor(one).tensor(one) - p.tensor(p).tensor(p).scale(
        Fraction(2))
    assert Hq.Phi == want
    assert Hq.alpha == g
    assert Hq.beta == one


def test_twisted_z2_self_inverse_associator():
    Hq = twisted_z2()
    assert Hq.PhiInv == Hq.Phi
    assert Hq.tmul(Hq.Phi, Hq.Phi) == Hq.unit_elt(3)


def test_cyclic_cocycle_values():
    Hq = cyclic_with_cocycle(7, 3)
    # the associator entry at (i, j, k) is zeta^(i * floor((j+k)/3)) on
    # the idempotent basis, with zeta = 2^((7-1)/3) = 4 of order 3 mod 7
    zeta = pow(2, (7 - 1) // 3, 7)
    assert zeta == 4 and pow(zeta, 3, 7) == 1
    for (i, j, k), c in Hq.Phi.terms.items():
        assert c == pow(zeta, i * ((j + k) // 3), 7)


@pytest.mark.parametrize("name", ["QZ2", "H2", "Sweedler4"])
def test_variants_are_quasi_hopf(name):
    Hq = entry(name)["H"]
    for op, cop in ((True, False), (False, True), (True, True)):
        Hq.variant(op=op, cop=cop).verify().require(f"{name} variant")


def test_tensor_product_is_quasi_hopf():
    T = tensor_qh(twisted_z2(), sweedler4())
    assert T.n == 8
    T.verify().require("tensor product")
    T.verify_canonical().require("tensor product")


def test_gauge_twist_gives_quasi_hopf():
    Hq = twisted_z2()
    q = Fraction(1, 4)
    F = TensorElt(QQ, (2, 2), {(0, 0): 1 + q, (0, 1): -q,
                               (1, 0): -q, (1, 1): q})
    HF = Hq.gauge_twist(F)
    HF.verify().require("twisted")
    HF.verify_canonical().require("twisted")
    HF.verify_drinfeld().require("twisted")


def test_gauge_twist_roundtrip():
    Hq = twisted_z2()
    q = Fraction(1, 4)
    F = TensorElt(QQ, (2, 2), {(0, 0): 1 + q, (0, 1): -q,
                               (1, 0): -q, (1, 1): q})
    FInv = Hq._invert_tensor(F)
    back = Hq.gauge_twist(F).gauge_twist(FInv)
    assert back.Phi == Hq.Phi
    assert back.Delta == Hq.Delta
    assert back.alpha == Hq.alpha
    assert back.beta == Hq.beta


def test_gauge_twist_rejects_bad_f():
    Hq = group_algebra_z2()
    with pytest.raises(ValueError):
        Hq.gauge_twist(TensorElt(QQ, (2, 2), {(0, 0): Fraction(2)}))


def test_twist_of_drinfeld_element():
    # f for the twisted algebra: f_F = (S x S)(swap F^{-1}) f F^{-1}
    Hq = twisted_z2()
    q = Fraction(1, 4)
    F = TensorElt(QQ, (2, 2), {(0, 0): 1 + q, (0, 1): -q,
                               (1, 0): -q, (1, 1): q})
    FInv = Hq._invert_tensor(F)
    HF = Hq.gauge_twist(F, FInv=FInv)
    lhs = HF.drinfeld_twist().f
    swapped = FInv.permute((1, 0)).apply_at(0, Hq.S).apply_at(1, Hq.S)
    rhs = Hq.tmul(swapped, Hq.drinfeld_twist().f, FInv)
    assert lhs == rhs


def test_eps_scalar_and_tmul():
    Hq = sweedler4()
    assert Hq.eps_scalar(Hq.basis_elt(0)) == 1
    assert Hq.eps_scalar(Hq.basis_elt(1)) == 0
    t = Hq.tmul(Hq.unit_elt(2), Hq.unit_elt(2))
    assert t == Hq.unit_elt(2)
