from fractions import Fraction

import pytest

from quasihopf.actions import (BimoduleAlgebra, LeftModuleAlgebra,
                               RightModuleAlgebra, as_module_over_tensor,
                               bar_construction, bimodule_to_left,
                               bimodule_to_right, dual_bimodule_algebra,
                               left_to_bimodule, right_to_bimodule,
                               tensor_bimodule, trivial_left_action,
                               trivial_right_action, twist_action)
from quasihopf.corpus import adjoint_module_algebra
from quasihopf.fields import QQ
from quasihopf.finalg import opposite
from quasihopf.quasihopf import tensor_qh
from quasihopf.tensors import TensorElt

from conftest import entry

ALL = ["QZ2", "H2", "Sweedler4", "FpZn(7,3)", "FpZn(5,2)"]


@pytest.mark.parametrize("name", ALL)
def test_adjoint_module_algebra(name):
    entry(name)["module"].verify().require(name)


@pytest.mark.parametrize("name", ALL)
def test_dual_bimodule_algebra(name):
    entry(name)["dual"].verify().require(name)


@pytest.mark.parametrize("name", ALL)
def test_trivial_actions(name):
    Hq = entry(name)["H"]
    LeftModuleAlgebra(Hq, Hq.H, trivial_left_action(Hq, Hq.H), check=True)
    RightModuleAlgebra(Hq, Hq.H, trivial_right_action(Hq, Hq.H), check=True)


@pytest.mark.parametrize("name", ALL)
def test_bar_construction(name):
    Am = entry(name)["module"]
    bar = bar_construction(Am, check=True)
    assert isinstance(bar, RightModuleAlgebra)


@pytest.mark.parametrize("name", ["QZ2", "Sweedler4"])
def test_bar_is_opposite_for_coassociative_coproduct(name):
    # with the canonical twist trivial the bar product is a'a and the
    # action is through the antipode
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    bar = bar_construction(Am, check=False)
    assert bar.B.mul == opposite(Am.A).mul
    n = Hq.n
    for i in range(n):
        for j in range(n):
            h = Hq.basis_elt(i)
            a = TensorElt.basis(QQ, (n,), (j,))
            got = a.tensor(h).apply_at(0, bar.action)
            want = h.apply_at(0, Hq.S).tensor(a).apply_at(0, Am.action)
            assert got == want


@pytest.mark.parametrize("name", ["QZ2", "H2", "Sweedler4"])
def test_bimodule_conversions(name):
    st = entry(name)
    Hq, Am, Du = st["H"], st["module"], st["dual"]
    bi = left_to_bimodule(Am, check=True)
    back = bimodule_to_left(bi, check=True)
    assert back.action == Am.action
    Bm = RightModuleAlgebra(Hq, Hq.H, trivial_right_action(Hq, Hq.H),
                            check=False)
    bi2 = right_to_bimodule(Bm, check=True)
    assert bimodule_to_right(bi2, check=True).action == Bm.action
    # the dual carries nontrivial actions on both sides
    with pytest.raises(ValueError):
        bimodule_to_left(Du, check=False)
    with pytest.raises(ValueError):
        bimodule_to_right(Du, check=False)


@pytest.mark.parametrize("name", ["QZ2", "H2", "Sweedler4"])
def test_tensor_bimodule(name):
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    Bm = RightModuleAlgebra(Hq, Hq.H, trivial_right_action(Hq, Hq.H),
                            check=False)
    tensor_bimodule(Am, Bm, check=True)


def test_twist_action_h2():
    st = entry("H2")
    Hq, Am, Du = st["H"], st["module"], st["dual"]
    q = Fraction(1, 4)
    F = TensorElt(QQ, (2, 2), {(0, 0): 1 + q, (0, 1): -q,
                               (1, 0): -q, (1, 1): q})
    twisted = twist_action(Am, F, check=True)
    assert twisted.Hq.Phi == Hq.gauge_twist(F).Phi
    twist_action(Du, F, check=True)
    Bm = RightModuleAlgebra(Hq, Hq.H, trivial_right_action(Hq, Hq.H),
                            check=False)
    twist_action(Bm, F, check=True)


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_as_module_over_tensor(name):
    st = entry(name)
    Hq, Du = st["H"], st["dual"]
    K = tensor_qh(Hq, Hq.variant(op=True))
    mod = as_module_over_tensor(Du, K, check=True)
    # (h x h') . phi agrees with h . phi . h'
    n, m = Hq.n, Du.A.dim
    for i in range(n):
        for j in range(n):
            for k in range(m):
                h = Hq.basis_elt(i)
                hp = Hq.basis_elt(j)
                phi = Du.basis_elt(k)
                flat = TensorElt.basis(QQ if Hq.field.is_rational
                                       else Hq.field,
                                       (n, n), (i, j)).merge_slots((2,))
                got = flat.tensor(phi).apply_at(0, mod.action)
                want = h.tensor(phi).apply_at(0, Du.left).tensor(hp) \
                    .apply_at(0, Du.right)
                assert got == want
