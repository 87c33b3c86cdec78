from fractions import Fraction

import pytest

from quasihopf.actions import LeftModuleAlgebra
from quasihopf.fields import QQ
from quasihopf.tensors import TensorElt, linmap_from_fn
from quasihopf.ydrep import (BimoduleCoalgebra, FinModule, YDModule,
                             dual_of_bimodule_coalgebra,
                             mixed_translation_identity, module_to_yd,
                             regular_bimodule_coalgebra, regular_module,
                             sec8_correspondences, yd_product,
                             yd_roundtrip_check, yd_to_module)

from conftest import entry

ALL = ["QZ2", "H2", "Sweedler4", "FpZn(7,3)", "FpZn(5,2)"]
SMALL = ["QZ2", "H2", "Sweedler4"]


@pytest.mark.parametrize("name", ALL)
def test_regular_bimodule_coalgebra(name):
    entry(name)["coalgebra"].verify().require(name)


@pytest.mark.parametrize("name", ALL)
def test_convolution_dual_matches_dual_bimodule(name):
    st = entry(name)
    dual = dual_of_bimodule_coalgebra(st["coalgebra"], check=False)
    Du = st["dual"]
    assert dual.A.mul == Du.A.mul
    assert dual.A.unit == Du.A.unit
    assert dual.left.mat == Du.left.mat
    assert dual.right.mat == Du.right.mat


@pytest.mark.parametrize("name", ALL)
def test_mixed_translation_identity(name):
    assert mixed_translation_identity(entry(name)["bicomodule"])


@pytest.mark.parametrize("name", SMALL)
def test_yd_roundtrip(name):
    st = entry(name)
    yd_roundtrip_check(st["H"], st["bicomodule"], st["coalgebra"]) \
        .require(name)


@pytest.mark.parametrize("name", SMALL)
def test_module_translations(name):
    st = entry(name)
    sec8_correspondences(st["H"], st["module"], st["module"]).require(name)


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_yd_structures_verify(name):
    st = entry(name)
    Ab, C = st["bicomodule"], st["coalgebra"]
    dual, prod = yd_product(Ab, C, check=True)
    M = regular_module(prod.result, check=True)
    yd = module_to_yd(M, Ab, C, check=True)
    assert isinstance(yd, YDModule)
    back = yd_to_module(yd, prod, check=True)
    assert isinstance(back, FinModule)


def test_broken_comultiplication_detected():
    st = entry("QZ2")
    Hq, C = st["H"], st["coalgebra"]
    n = Hq.n
    # a coproduct that is not counital on basis e_1
    comul = linmap_from_fn(QQ, (n,), (n, n),
                           lambda idx: TensorElt.basis(QQ, (n, n), (0, 0)))
    bad = BimoduleCoalgebra(Hq, n, comul, C.counit, C.left, C.right,
                            check=False)
    assert not bad.verify().ok


def test_broken_module_action_detected():
    # an action ignoring the coproduct breaks the compatibility between
    # the product of the algebra and the action
    st = entry("Sweedler4")
    Hq, Am = st["H"], st["module"]
    n = Hq.n

    def bad_fn(idx):
        t = TensorElt.basis(QQ, (n, n), idx)
        return t.apply_at(0, Hq.S).permute((1, 0)).mul_slots(0, 1, Hq.H)

    bad = LeftModuleAlgebra(Hq, Am.A,
                            linmap_from_fn(QQ, (n, n), (n,), bad_fn),
                            check=False)
    rep = sec8_correspondences(Hq, bad, Am)
    assert not rep.ok


def test_fin_module_verify_rejects_non_action():
    st = entry("QZ2")
    Hq = st["H"]
    n = Hq.n
    # constant map is not unital
    act = linmap_from_fn(QQ, (n, n), (n,),
                         lambda idx: TensorElt.basis(QQ, (n,), (1,)))
    with pytest.raises(Exception):
        FinModule(Hq.H, n, act, check=True)


def test_regular_module():
    st = entry("Sweedler4")
    regular_module(st["H"].H, check=True)


def test_yd_product_dimensions():
    st = entry("H2")
    Ab, C = st["bicomodule"], st["coalgebra"]
    dual, prod = yd_product(Ab, C, check=False)
    assert prod.result.dim == C.dim * Ab.A.dim
