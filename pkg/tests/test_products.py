import pytest

from quasihopf.actions import RightModuleAlgebra, trivial_right_action
from quasihopf.coactions import tensor_bicomodule, two_sided_from_bicomodule
from quasihopf.finalg import verify_associative_unital
from quasihopf.products import (diag_crossed, diag_crossed_general, gen_smash,
                                gen_two_sided_crossed, induced_costructures,
                                left_quasi_smash, quasi_smash, right_gen_smash,
                                right_smash, smash, two_sided_gen_smash,
                                two_sided_smash)
from quasihopf.tensors import TensorElt

from conftest import entry

SMALL = ["QZ2", "H2", "Sweedler4"]
HOPF = ["QZ2", "Sweedler4"]


def right_regular(Hq):
    return RightModuleAlgebra(Hq, Hq.H, trivial_right_action(Hq, Hq.H),
                              name="Ht", check=False)


@pytest.mark.parametrize("name", SMALL)
def test_smash_products(name):
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    p = smash(Am, check=True)
    assert p.result.dim == Am.A.dim * Hq.n
    right_smash(right_regular(Hq), check=True)
    two_sided_smash(Am, right_regular(Hq), check=True)


@pytest.mark.parametrize("name", SMALL)
def test_generalized_smash_products(name):
    st = entry(name)
    Am, Ab = st["module"], st["bicomodule"]
    gen_smash(Am, Ab, check=True)
    right_gen_smash(Ab, right_regular(st["H"]), check=True)
    two_sided_gen_smash(Am, Ab, right_regular(st["H"]), check=True)


@pytest.mark.parametrize("name", SMALL)
def test_quasi_smash_products(name):
    st = entry(name)
    Ab, Du = st["bicomodule"], st["dual"]
    quasi_smash(Ab, Du, check=True)
    left_quasi_smash(Du, Ab, check=True)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("flavor", ["bowtie", "btrl", "rbowtie", "rbtrl"])
def test_diagonal_crossed_products(name, flavor):
    st = entry(name)
    p = diag_crossed(st["dual"], st["bicomodule"], flavor, check=True)
    verify_associative_unital(p.result, limit=3).require(f"{name} {flavor}")


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_diag_general_delta(name):
    st = entry(name)
    d = two_sided_from_bicomodule(st["bicomodule"], "l", check=False)
    from quasihopf.coactions import omega_from_coaction
    for side, primed in (("left", False), ("right", True)):
        diag_crossed_general(st["dual"], d, side, check=True,
                             Om=omega_from_coaction(d, primed=primed))


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_gen_two_sided_crossed(name):
    st = entry(name)
    Ab, Du = st["bicomodule"], st["dual"]
    gen_two_sided_crossed(Ab, Du, Ab, check=True)


@pytest.mark.parametrize("name", HOPF)
def test_smash_against_direct_hopf_formula(name):
    # ordinary Hopf case: (a#h)(a'#h') = a(h_1.a') # h_2 h', coded here
    # straight from the coproduct as an independent table
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    n, m = Hq.n, Am.A.dim
    p = smash(Am, check=False)
    fld = Hq.field
    for ia in range(m):
        for ih in range(n):
            for ja in range(m):
                for jh in range(n):
                    t = TensorElt.basis(fld, (m, n, m, n), (ia, ih, ja, jh))
                    t = t.apply_at(1, Hq.Delta)
                    # [a, h1, h2, a', h']
                    t = t.permute((0, 1, 3, 2, 4))
                    t = t.apply_at(1, Am.action).mul_slots(0, 1, Am.A)
                    t = t.mul_slots(1, 2, Hq.H)
                    got = p.result.mul[ia * n + ih][ja * n + jh]
                    assert list(t.merge_slots((2,)).to_flat()) == got


@pytest.mark.parametrize("name", HOPF)
def test_two_sided_smash_against_direct_hopf_formula(name):
    # (a#h#b)(a'#h'#b') = a(h_1.a') # h_2 h'_1 # (b.h'_2)b'
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    Bm = right_regular(Hq)
    n, m = Hq.n, Am.A.dim
    p = two_sided_smash(Am, Bm, check=False)
    fld = Hq.field
    dims = (m, n, n, m, n, n)
    for i in range(p.result.dim):
        for j in range(p.result.dim):
            ia, r = divmod(i, n * n)
            ih, ib = divmod(r, n)
            ja, r = divmod(j, n * n)
            jh, jb = divmod(r, n)
            t = TensorElt.basis(fld, dims, (ia, ih, ib, ja, jh, jb))
            t = t.apply_at(1, Hq.Delta).apply_at(5, Hq.Delta)
            # [a, h1, h2, b, a', h'1, h'2, b']
            t = t.permute((0, 1, 4, 2, 5, 3, 6, 7))
            # -> [a, h1, a', h2, h'1, b, h'2, b']
            t = t.apply_at(1, Am.action).mul_slots(0, 1, Am.A)
            t = t.mul_slots(1, 2, Hq.H)
            t = t.apply_at(2, Bm.action).mul_slots(2, 3, Bm.B)
            assert list(t.merge_slots((3,)).to_flat()) == p.result.mul[i][j]


@pytest.mark.parametrize("name", HOPF)
def test_diag_flavors_coincide_for_hopf(name):
    st = entry(name)
    Du, Ab = st["dual"], st["bicomodule"]
    b = diag_crossed(Du, Ab, "bowtie", check=False)
    t = diag_crossed(Du, Ab, "btrl", check=False)
    assert b.result.mul == t.result.mul


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_diag_flavors_coincide_on_tensor_bicomodule(name):
    # when the bicomodule splits as right (x) left comodule factors the
    # two nested coactions agree, so both flavors give one algebra
    st = entry(name)
    Ab0 = st["bicomodule"]
    Ab = tensor_bicomodule(Ab0.right, Ab0.left, check=False)
    Du = st["dual"]
    b = diag_crossed(Du, Ab, "bowtie", check=False)
    t = diag_crossed(Du, Ab, "btrl", check=False)
    assert b.result.mul == t.result.mul


@pytest.mark.parametrize("name", ["QZ2", "H2"])
def test_induced_costructures(name):
    st = entry(name)
    p = gen_smash(st["module"], st["bicomodule"], check=False)
    induced_costructures(p, check=True)


def test_mismatched_parents_rejected():
    Am = entry("QZ2")["module"]
    Ab = entry("Sweedler4")["bicomodule"]
    with pytest.raises(ValueError):
        gen_smash(Am, Ab, check=False)


@pytest.mark.parametrize("name", SMALL)
def test_product_units_and_embeddings(name):
    st = entry(name)
    Hq, Am = st["H"], st["module"]
    p = smash(Am, check=False)
    want = Am.unit_elt().tensor(Hq.unit_elt()).merge_slots((2,)).to_flat()
    assert list(p.result.unit) == list(want)
