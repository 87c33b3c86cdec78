"""Product algebra constructors.

Each constructor evaluates one multiplication formula on every basis
pair with the slot combinators, fills a structure tensor, verifies
associativity and the asserted factor embeddings, and returns a
ProductAlgebra.  The quasi-smash constructors return module algebras
instead (their products are only quasi-associative).

Kinds:

* ``Smash`` / ``RightSmash``            - A#H and H#B
* ``GenSmash`` / ``RightGenSmash``      - A (x) comodule algebra
* ``QuasiSmash`` / ``LeftQuasiSmash``   - comodule (x) bimodule algebra
* ``DiagLGeneralDelta`` / ``DiagRGeneralDelta``
                                        - diagonal products of a
                                          bimodule algebra with any
                                          two-sided coaction
* ``DiagBowtie`` / ``DiagBtrl`` / ``RDiagBowtie`` / ``RDiagBtrl``
                                        - the four diagonal products
                                          of a bicomodule algebra
* ``GenTwoSidedCrossed``                - comodule # bimodule # comodule
* ``TwoSidedGenSmash`` / ``TwoSidedSmash``
                                        - module # bicomodule # module
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .actions import BimoduleAlgebra, LeftModuleAlgebra, RightModuleAlgebra
from .coactions import (BicomoduleAlgebra, LeftComoduleAlgebra,
                        RightComoduleAlgebra, TwoSidedCoaction,
                        omega_from_coaction, regular_bicomodule,
                        two_sided_from_bicomodule)
from .finalg import (FinAlgebra, Report, algebra_from_pair_fn,
                     check_algebra_map, verify_associative_unital)
from .linalg import Mat, prod, unflatten
from .tensors import TensorElt, linmap_from_fn

KINDS = ("Smash", "RightSmash", "GenSmash", "RightGenSmash", "QuasiSmash",
         "LeftQuasiSmash", "DiagLGeneralDelta", "DiagRGeneralDelta",
         "DiagBowtie", "DiagBtrl", "RDiagBowtie", "RDiagBtrl",
         "GenTwoSidedCrossed", "TwoSidedGenSmash", "TwoSidedSmash")


@dataclass
class ProductAlgebra:
    """A verified product algebra on the flat tensor coordinate space."""
    result: FinAlgebra
    kind: str
    factors: tuple
    dims: tuple
    embeddings: dict = dc_field(default_factory=dict)

    def flat(self, t: TensorElt):
        """Coordinates of a slot tensor inside the product algebra."""
        if t.dims != self.dims:
            t = t.split_slot(0, self.dims) if len(t.dims) == 1 else t
        return t.merge_slots((len(self.dims),)).to_flat()


def _basis(field, dims, idx_i, idx_j, sizes):
    """The two factor tuples of basis tensors for a pair of indices."""
    lhs = [TensorElt.basis(field, (m,), (i,)) for m, i in zip(sizes, idx_i)]
    rhs = [TensorElt.basis(field, (m,), (i,)) for m, i in zip(sizes, idx_j)]
    return lhs, rhs


def _slot_embedding(field, dims, units, pos) -> Mat:
    """Matrix of e_i -> 1 (x) ... (x) e_i (x) ... (x) 1 at slot pos."""
    m = dims[pos]
    cols = []
    for i in range(m):
        t = TensorElt.basis(field, (m,), (i,))
        for s in range(pos):
            t = t.insert(0, units[pos - 1 - s])
        for s in range(pos + 1, len(dims)):
            t = t.insert(len(t.dims), units[s])
        cols.append(t.to_flat())
    rows = [[cols[j][r] for j in range(m)] for r in range(prod(dims))]
    return Mat(field, rows, m)


def _require_embedding(rep, mat, sub, result, label):
    emb = check_algebra_map(mat, sub, result)
    for msg in emb.failures:
        rep.add(f"embedding {label}", msg)


def _same_parent(*objs):
    Hq = objs[0].Hq
    for o in objs[1:]:
        if o.Hq is not Hq and o.Hq.H != Hq.H:
            raise ValueError("factors live over different parents")
    return Hq


# -- one- and two-factor smash products ---------------------------------------

def smash(Am: LeftModuleAlgebra, check: bool = True) -> ProductAlgebra:
    """A#H: (a#h)(a'#h') = (x1.a)(x2 h_1.a') # x3 h_2 h'."""
    Hq = Am.Hq
    H = Hq.H
    Aalg = Am.A
    n, mA = Hq.n, Aalg.dim
    fld = Hq.field
    dims = (mA, n)

    def pair(idx_i, idx_j):
        (a, h), (a2, h2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = Hq.PhiInv.insert(1, a).apply_at(0, Am.action)
        t = t.insert(3, h).apply_at(3, Hq.Delta).mul_slots(1, 3, H)
        t = t.insert(2, a2).apply_at(1, Am.action).mul_slots(0, 1, Aalg)
        t = t.mul_slots(1, 2, H)
        return t.insert(2, h2).mul_slots(1, 2, H)

    unit = Am.unit_elt().tensor(Hq.unit_elt())
    name = f"{Am.name}#{Hq.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    hopf = _slot_embedding(fld, dims, [Am.unit_elt(), Hq.unit_elt()], 1)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, hopf, H, alg, "H")
        # (a#h)(1#h') = a#hh' and (1#h)(a#h') = h_1.a # h_2 h'
        for ia in range(mA):
            for ih in range(n):
                for ih2 in range(n):
                    a = TensorElt.basis(fld, (mA,), (ia,))
                    h = TensorElt.basis(fld, (n,), (ih,))
                    h2 = TensorElt.basis(fld, (n,), (ih2,))
                    got = alg.multiply(a.tensor(h).to_flat(),
                                       Am.unit_elt().tensor(h2).to_flat())
                    want = a.tensor(h.insert(1, h2).mul_slots(0, 1, H))
                    rep.check(got == want.to_flat(), "absorb-right",
                              f"(e_{ia}#e_{ih})(1#e_{ih2})")
                    got = alg.multiply(Am.unit_elt().tensor(h).to_flat(),
                                       a.tensor(h2).to_flat())
                    w = h.apply_at(0, Hq.Delta).insert(1, a)
                    w = w.apply_at(0, Am.action)
                    w = w.insert(2, h2).mul_slots(1, 2, H)
                    rep.check(got == w.to_flat(), "absorb-left",
                              f"(1#e_{ih})(e_{ia}#e_{ih2})")
        rep.require(name)
    return ProductAlgebra(alg, "Smash", (Am,), dims, {"H": hopf})


def right_smash(Bm: RightModuleAlgebra, check: bool = True) -> ProductAlgebra:
    """H#B: (h#b)(h'#b') = h h'_1 x1 # (b.h'_2 x2)(b'.x3)."""
    Hq = Bm.Hq
    H = Hq.H
    Balg = Bm.B
    n, mB = Hq.n, Balg.dim
    fld = Hq.field
    dims = (n, mB)

    def pair(idx_i, idx_j):
        (h, b), (h2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = h.tensor(b).tensor(h2).tensor(b2).apply_at(2, Hq.Delta)
        t = t.insert(5, Hq.PhiInv)
        t = t.mul_slots(0, 2, H).mul_slots(0, 4, H)
        t = t.mul_slots(2, 4, H)
        t = t.apply_at(1, Bm.action).apply_at(2, Bm.action)
        return t.mul_slots(1, 2, Balg)

    unit = Hq.unit_elt().tensor(Bm.unit_elt())
    name = f"{Hq.name}#{Bm.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    hopf = _slot_embedding(fld, dims, [Hq.unit_elt(), Bm.unit_elt()], 0)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, hopf, H, alg, "H")
        rep.require(name)
    return ProductAlgebra(alg, "RightSmash", (Bm,), dims, {"H": hopf})


def _left_part(x) -> LeftComoduleAlgebra:
    return x.left if isinstance(x, BicomoduleAlgebra) else x


def _right_part(x) -> RightComoduleAlgebra:
    return x.right if isinstance(x, BicomoduleAlgebra) else x


def gen_smash(Am: LeftModuleAlgebra, Bfr, check: bool = True,
              kind: str = "GenSmash") -> ProductAlgebra:
    """A (x) left comodule algebra:
    (a x b)(a' x b') = (xl1.a)(xl2 b_-1 . a') x xl3 b_0 b'."""
    Bco = _left_part(Bfr)
    Hq = _same_parent(Am, Bco)
    H = Hq.H
    Aalg, Balg = Am.A, Bco.B
    mA, mB = Aalg.dim, Balg.dim
    fld = Hq.field
    dims = (mA, mB)

    def pair(idx_i, idx_j):
        (a, b), (a2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = Bco.PhiLamInv.insert(1, a).apply_at(0, Am.action)
        t = t.insert(2, b).apply_at(2, Bco.lam).mul_slots(1, 2, H)
        t = t.insert(2, a2).apply_at(1, Am.action).mul_slots(0, 1, Aalg)
        t = t.mul_slots(2, 1, Balg)
        return t.insert(2, b2).mul_slots(1, 2, Balg)

    unit = Am.unit_elt().tensor(Bco.unit_elt())
    name = f"{Am.name}>*<{Bco.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    sub = _slot_embedding(fld, dims, [Am.unit_elt(), Bco.unit_elt()], 1)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, sub, Balg, alg, "comodule")
        rep.require(name)
    return ProductAlgebra(alg, kind, (Am, Bfr), dims, {"comodule": sub})


def right_gen_smash(Afr, Bm: RightModuleAlgebra, check: bool = True,
                    kind: str = "RightGenSmash") -> ProductAlgebra:
    """Right comodule algebra (x) B:
    (a x b)(a' x b') = a a'_0 xr1 x (b.a'_1 xr2)(b'.xr3)."""
    Aco = _right_part(Afr)
    Hq = _same_parent(Aco, Bm)
    H = Hq.H
    Aalg, Balg = Aco.A, Bm.B
    mA, mB = Aalg.dim, Balg.dim
    fld = Hq.field
    dims = (mA, mB)

    def pair(idx_i, idx_j):
        (a, b), (a2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = a.tensor(b).tensor(a2).tensor(b2).apply_at(2, Aco.rho)
        t = t.insert(5, Aco.PhiRhoInv)
        t = t.mul_slots(0, 2, Aalg).mul_slots(0, 4, Aalg)
        t = t.mul_slots(2, 4, H)
        t = t.apply_at(1, Bm.action).apply_at(2, Bm.action)
        return t.mul_slots(1, 2, Balg)

    unit = Aco.unit_elt().tensor(Bm.unit_elt())
    name = f"{Aco.name}>!<{Bm.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    sub = _slot_embedding(fld, dims, [Aco.unit_elt(), Bm.unit_elt()], 0)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, sub, Aalg, alg, "comodule")
        rep.require(name)
    return ProductAlgebra(alg, kind, (Afr, Bm), dims, {"comodule": sub})


# -- quasi-smash products (module algebras, not associative in general) -------

def quasi_smash(Afr, Abi: BimoduleAlgebra,
                check: bool = True) -> LeftModuleAlgebra:
    """Right comodule algebra (x) bimodule algebra as a left module
    algebra: (a x p)(a' x p') = a a'_0 xr1 x (p.a'_1 xr2)(p'.xr3),
    with H acting through the bimodule slot."""
    Aco = _right_part(Afr)
    Hq = _same_parent(Aco, Abi)
    H = Hq.H
    Aalg, Palg = Aco.A, Abi.A
    mA, mP = Aalg.dim, Palg.dim
    fld = Hq.field
    dims = (mA, mP)

    def pair(idx_i, idx_j):
        (a, p), (a2, p2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = a.tensor(p).tensor(a2).tensor(p2).apply_at(2, Aco.rho)
        t = t.insert(5, Aco.PhiRhoInv)
        t = t.mul_slots(0, 2, Aalg).mul_slots(0, 4, Aalg)
        t = t.mul_slots(2, 4, H)
        t = t.apply_at(1, Abi.right).apply_at(2, Abi.right)
        return t.mul_slots(1, 2, Palg)

    unit = Aco.unit_elt().tensor(Abi.unit_elt())
    name = f"{Aco.name}#~{Abi.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    action = linmap_from_fn(
        fld, (Hq.n, mA * mP), (mA * mP,),
        lambda idx: TensorElt.basis(fld, (Hq.n, mA, mP),
                                    (idx[0],) + divmod(idx[1], mP))
        .permute((1, 0, 2)).apply_at(1, Abi.left).merge_slots((2,)))
    return LeftModuleAlgebra(Hq, alg, action, name=name, check=check)


def left_quasi_smash(Abi: BimoduleAlgebra, Bfr,
                     check: bool = True) -> RightModuleAlgebra:
    """Bimodule algebra (x) left comodule algebra as a right module
    algebra: (p x b)(p' x b') = (xl1.p)(xl2 b_-1.p') x xl3 b_0 b'."""
    Bco = _left_part(Bfr)
    Hq = _same_parent(Abi, Bco)
    H = Hq.H
    Palg, Balg = Abi.A, Bco.B
    mP, mB = Palg.dim, Balg.dim
    fld = Hq.field
    dims = (mP, mB)

    def pair(idx_i, idx_j):
        (p, b), (p2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = Bco.PhiLamInv.insert(1, p).apply_at(0, Abi.left)
        t = t.insert(2, b).apply_at(2, Bco.lam).mul_slots(1, 2, H)
        t = t.insert(2, p2).apply_at(1, Abi.left).mul_slots(0, 1, Palg)
        t = t.mul_slots(2, 1, Balg)
        return t.insert(2, b2).mul_slots(1, 2, Balg)

    unit = Abi.unit_elt().tensor(Bco.unit_elt())
    name = f"{Abi.name}#~{Bco.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    action = linmap_from_fn(
        fld, (mP * mB, Hq.n), (mP * mB,),
        lambda idx: TensorElt.basis(fld, (mP, mB, Hq.n),
                                    divmod(idx[0], mB) + (idx[1],))
        .permute((0, 2, 1)).apply_at(0, Abi.right).merge_slots((2,)))
    return RightModuleAlgebra(Hq, alg, action, name=name, check=check)


# -- diagonal crossed products ------------------------------------------------

def _diag_left_pair(Abi, d, Om):
    """(p >< u)(p' >< u') = (O1.p.O5)(O2 u_-1 . p' . S^{-1}(u_1) O4)
    >< O3 u_0 u'."""
    Hq = Abi.Hq
    H = Hq.H
    Palg, Ualg = Abi.A, d.A
    fld = Hq.field
    dims = (Palg.dim, d.A.dim)

    def pair(idx_i, idx_j):
        (p, u), (p2, u2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = Om.insert(1, p).apply_at(0, Abi.left)
        t = t.permute((0, 4, 1, 2, 3)).apply_at(0, Abi.right)
        t = t.insert(4, u).apply_at(4, d.delta)
        t = t.mul_slots(1, 4, H)
        t = t.apply_at(5, Hq.SInv).mul_slots(5, 3, H)
        t = t.insert(2, p2).apply_at(1, Abi.left)
        t = t.permute((0, 1, 4, 2, 3)).apply_at(1, Abi.right)
        t = t.mul_slots(0, 1, Palg).mul_slots(1, 2, Ualg)
        return t.insert(2, u2).mul_slots(1, 2, Ualg)

    return dims, pair


def _diag_right_pair(Abi, d, Omp):
    """(u >< p)(u' >< p') = u u'_0 O'3 ><
    (O'2 S^{-1}(u'_-1).p.u'_1 O'4)(O'1.p'.O'5)."""
    Hq = Abi.Hq
    H = Hq.H
    Palg, Ualg = Abi.A, d.A
    fld = Hq.field
    dims = (d.A.dim, Palg.dim)

    def pair(idx_i, idx_j):
        (u, p), (u2, p2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = Omp.insert(0, u2).apply_at(0, d.delta).insert(0, u)
        t = t.mul_slots(0, 2, Ualg).mul_slots(0, 5, Ualg)
        t = t.apply_at(1, Hq.SInv).mul_slots(4, 1, H)
        t = t.mul_slots(1, 4, H)
        t = t.insert(4, p).apply_at(3, Abi.left)
        t = t.permute((0, 2, 3, 1, 4)).apply_at(2, Abi.right)
        t = t.insert(2, p2).apply_at(1, Abi.left)
        t = t.permute((0, 2, 1, 3)).apply_at(2, Abi.right)
        return t.mul_slots(1, 2, Palg)

    return dims, pair


def diag_crossed_general(Abi: BimoduleAlgebra, d: TwoSidedCoaction,
                         side: str = "left", check: bool = True,
                         kind: str | None = None,
                         factors: tuple | None = None,
                         Om: TensorElt | None = None) -> ProductAlgebra:
    """Diagonal crossed product of a bimodule algebra with the algebra
    carrying a two-sided coaction, on either side."""
    Hq = _same_parent(Abi, d)
    fld = Hq.field
    if side == "left":
        if Om is None:
            Om = omega_from_coaction(d)
        dims, pair = _diag_left_pair(Abi, d, Om)
        units = [Abi.unit_elt(), d.unit_elt()]
        sub_pos = 1
        kind = kind or "DiagLGeneralDelta"
    elif side == "right":
        if Om is None:
            Om = omega_from_coaction(d, primed=True)
        dims, pair = _diag_right_pair(Abi, d, Om)
        units = [d.unit_elt(), Abi.unit_elt()]
        sub_pos = 0
        kind = kind or "DiagRGeneralDelta"
    else:
        raise ValueError("side must be 'left' or 'right'")
    unit = units[0].tensor(units[1])
    name = f"{Abi.name}><{d.name}" if side == "left" \
        else f"{d.name}><{Abi.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    sub = _slot_embedding(fld, dims, units, sub_pos)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, sub, d.A, alg, "middle")
        # mixed products of the two unital copies recover the generators
        mP, mU = Abi.A.dim, d.A.dim
        for ip in range(mP):
            for iu in range(mU):
                p = TensorElt.basis(fld, (mP,), (ip,))
                u = TensorElt.basis(fld, (mU,), (iu,))
                if side == "left":
                    got = alg.multiply(p.tensor(units[1]).to_flat(),
                                       units[0].tensor(u).to_flat())
                    want = p.tensor(u)
                else:
                    got = alg.multiply(u.tensor(units[1]).to_flat(),
                                       units[0].tensor(p).to_flat())
                    want = u.tensor(p)
                rep.check(got == want.to_flat(), "generator-recombination",
                          f"pair ({ip},{iu})")
        rep.require(name)
    return ProductAlgebra(alg, kind, factors or (Abi, d), dims,
                          {"middle": sub})


_DIAG_FLAVORS = {
    "bowtie": ("l", False, "left", "DiagBowtie"),
    "btrl": ("r", False, "left", "DiagBtrl"),
    "rbowtie": ("l", True, "right", "RDiagBowtie"),
    "rbtrl": ("r", True, "right", "RDiagBtrl"),
}


def diag_crossed(Abi: BimoduleAlgebra, Ab: BicomoduleAlgebra,
                 flavor: str = "bowtie", check: bool = True) -> ProductAlgebra:
    """One of the four diagonal crossed products of a bimodule algebra
    with a bicomodule algebra."""
    if flavor not in _DIAG_FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    nest, primed, side, kind = _DIAG_FLAVORS[flavor]
    d = two_sided_from_bicomodule(Ab, nest, check=False)
    Om = omega_from_coaction(d, primed=primed)
    return diag_crossed_general(Abi, d, side, check=check, kind=kind,
                                factors=(Abi, Ab), Om=Om)


# -- three-factor products ----------------------------------------------------

def gen_two_sided_crossed(Afr, Abi: BimoduleAlgebra, Bfr,
                          check: bool = True) -> ProductAlgebra:
    """Right comodule # bimodule # left comodule:
    (a, p, b)(a', p', b') = a a'_0 xr1 x (xl1.p.a'_1 xr2)
    (xl2 b_-1 . p' . xr3) x xl3 b_0 b'."""
    Aco, Bco = _right_part(Afr), _left_part(Bfr)
    Hq = _same_parent(Aco, Abi, Bco)
    H = Hq.H
    Aalg, Palg, Balg = Aco.A, Abi.A, Bco.B
    mA, mP, mB = Aalg.dim, Palg.dim, Balg.dim
    fld = Hq.field
    dims = (mA, mP, mB)
    static = Bco.PhiLamInv  # inserted per pair after the rho factors

    def pair(idx_i, idx_j):
        (a, p, b), (a2, p2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = a.tensor(a2).tensor(p).tensor(p2).tensor(b).tensor(b2)
        t = t.apply_at(1, Aco.rho).apply_at(5, Bco.lam)
        t = t.insert(3, Aco.PhiRhoInv).insert(6, static)
        # [a, a'0, a'1, xr1, xr2, xr3, xl1, xl2, xl3, p, p', b-1, b0, b']
        t = t.mul_slots(0, 1, Aalg).mul_slots(0, 2, Aalg)
        # [A, a'1, xr2, xr3, xl1, xl2, xl3, p, p', b-1, b0, b']
        t = t.mul_slots(1, 2, H)
        # [A, a'1 xr2, xr3, xl1, xl2, xl3, p, p', b-1, b0, b']
        t = t.permute((0, 1, 2, 3, 6, 4, 5, 7, 8, 9, 10))
        t = t.apply_at(3, Abi.left)
        # [A, Y, xr3, P1, xl2, xl3, p', b-1, b0, b']
        t = t.permute((0, 3, 1, 2, 4, 5, 6, 7, 8, 9))
        t = t.apply_at(1, Abi.right)
        # [A, P1, xr3, xl2, xl3, p', b-1, b0, b']
        t = t.mul_slots(3, 6, H)
        # [A, P1, xr3, xl2 b-1, xl3, p', b0, b']
        t = t.permute((0, 1, 2, 3, 5, 4, 6, 7)).apply_at(3, Abi.left)
        # [A, P1, xr3, P2, xl3, b0, b']
        t = t.permute((0, 1, 3, 2, 4, 5, 6)).apply_at(2, Abi.right)
        # [A, P1, P2, xl3, b0, b']
        t = t.mul_slots(1, 2, Palg)
        t = t.mul_slots(2, 3, Balg)
        return t.mul_slots(2, 3, Balg)

    unit = Aco.unit_elt().tensor(Abi.unit_elt()).tensor(Bco.unit_elt())
    name = f"{Aco.name}><{Abi.name}><{Bco.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    units = [Aco.unit_elt(), Abi.unit_elt(), Bco.unit_elt()]
    left = _slot_embedding(fld, dims, units, 0)
    right = _slot_embedding(fld, dims, units, 2)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, left, Aalg, alg, "outer-left")
        _require_embedding(rep, right, Balg, alg, "outer-right")
        rep.require(name)
    return ProductAlgebra(alg, "GenTwoSidedCrossed", (Afr, Abi, Bfr), dims,
                          {"outer-left": left, "outer-right": right})


def two_sided_gen_smash(Am: LeftModuleAlgebra, Ab: BicomoduleAlgebra,
                        Bm: RightModuleAlgebra, check: bool = True,
                        kind: str = "TwoSidedGenSmash") -> ProductAlgebra:
    """Module # bicomodule # module:
    (a, u, b)(a', u', b') = (xl1.a)(xl2 u_-1 t1.a') x
    xl3 u_0 t2 u'_0 xr1 x (b.t3 u'_1 xr2)(b'.xr3)."""
    Hq = _same_parent(Am, Ab, Bm)
    H = Hq.H
    Aalg, Ualg, Balg = Am.A, Ab.A, Bm.B
    mA, mU, mB = Aalg.dim, Ualg.dim, Balg.dim
    fld = Hq.field
    dims = (mA, mU, mB)
    static = Ab.left.PhiLamInv.tensor(Ab.PhiLRInv).tensor(Ab.right.PhiRhoInv)

    def pair(idx_i, idx_j):
        (a, u, b), (a2, u2, b2) = _basis(fld, dims, idx_i, idx_j, dims)
        t = static.insert(3, u).apply_at(3, Ab.lam)
        t = t.insert(7, u2).apply_at(7, Ab.rho)
        # [xl1, xl2, xl3, u-1, u0, t1, t2, u'0, u'1, t3, xr1, xr2, xr3]
        t = t.mul_slots(1, 3, H).mul_slots(1, 4, H)
        # [xl1, xl2 u-1 t1, xl3, u0, t2, u'0, u'1, t3, xr1, xr2, xr3]
        t = t.insert(1, a).apply_at(0, Am.action)
        t = t.insert(2, a2).apply_at(1, Am.action).mul_slots(0, 1, Aalg)
        # [A, xl3, u0, t2, u'0, u'1, t3, xr1, xr2, xr3]
        t = t.mul_slots(1, 2, Ualg).mul_slots(1, 2, Ualg)
        t = t.mul_slots(1, 2, Ualg).mul_slots(1, 4, Ualg)
        # [A, U, u'1, t3, xr2, xr3]
        t = t.mul_slots(3, 2, H).mul_slots(2, 3, H)
        # [A, U, t3 u'1 xr2, xr3]
        t = t.insert(2, b).apply_at(2, Bm.action)
        t = t.insert(3, b2).apply_at(3, Bm.action)
        return t.mul_slots(2, 3, Balg)

    unit = Am.unit_elt().tensor(Ab.unit_elt()).tensor(Bm.unit_elt())
    name = f"{Am.name}#{Ab.name}#{Bm.name}"
    alg = algebra_from_pair_fn(fld, dims, pair, unit, name=name, check=False)
    rep = Report()
    units = [Am.unit_elt(), Ab.unit_elt(), Bm.unit_elt()]
    mid = _slot_embedding(fld, dims, units, 1)
    if check:
        rep.merge(verify_associative_unital(alg, limit=None))
        _require_embedding(rep, mid, Ualg, alg, "middle")
        rep.require(name)
    return ProductAlgebra(alg, kind, (Am, Ab, Bm), dims, {"middle": mid})


def two_sided_smash(Am: LeftModuleAlgebra, Bm: RightModuleAlgebra,
                    check: bool = True) -> ProductAlgebra:
    """A#H#B, with the canonical unital embeddings of A#H and H#B."""
    Hq = _same_parent(Am, Bm)
    Ab = regular_bicomodule(Hq, check=False)
    p = two_sided_gen_smash(Am, Ab, Bm, check=check, kind="TwoSidedSmash")
    fld = Hq.field
    mA, n, mB = p.dims
    # i(a#h) = a#h#1 and j(h#b) = 1#h#b
    unitA, unitB = Am.unit_elt(), Bm.unit_elt()
    icols = []
    for f in range(mA * n):
        ia, ih = unflatten((mA, n), f)
        t = TensorElt.basis(fld, (mA, n), (ia, ih)).insert(2, unitB)
        icols.append(t.to_flat())
    jcols = []
    for f in range(n * mB):
        ih, ib = unflatten((n, mB), f)
        t = TensorElt.basis(fld, (n, mB), (ih, ib)).insert(0, unitA)
        jcols.append(t.to_flat())
    N = mA * n * mB
    imat = Mat(fld, [[icols[j][r] for j in range(mA * n)] for r in range(N)],
               mA * n)
    jmat = Mat(fld, [[jcols[j][r] for j in range(n * mB)] for r in range(N)],
               n * mB)
    if check:
        rep = Report()
        _require_embedding(rep, imat, smash(Am, check=False).result,
                           p.result, "left-smash")
        _require_embedding(rep, jmat, right_smash(Bm, check=False).result,
                           p.result, "right-smash")
        rep.require(p.result.name)
    p.embeddings["left-smash"] = imat
    p.embeddings["right-smash"] = jmat
    return p


# -- induced comodule algebra structures on products --------------------------

def _induced_right(p: ProductAlgebra, Am: LeftModuleAlgebra,
                   Ab: BicomoduleAlgebra,
                   check: bool = True) -> RightComoduleAlgebra:
    """rho(a x u) = (t1.a x t2 u_0) (x) t3 u_1 on a module-comodule
    smash product."""
    Hq = Ab.Hq
    H = Hq.H
    fld = Hq.field
    dims = p.dims
    N = prod(dims)
    theta = Ab.PhiLRInv

    def fn(idx):
        t = TensorElt.basis(fld, dims, unflatten(dims, idx[0]))
        t = t.apply_at(1, Ab.rho).insert(0, theta)
        t = t.permute((0, 3, 1, 2, 4, 5)).apply_at(0, Am.action)
        t = t.mul_slots(1, 3, Ab.A).mul_slots(2, 3, H)
        return t.merge_slots((2, 1))

    rho = linmap_from_fn(fld, (N,), (N, Hq.n), fn)
    unitA = Am.unit_elt()
    PhiRho = Ab.right.PhiRho.insert(0, unitA).merge_slots((2, 1, 1))
    PhiRhoInv = Ab.right.PhiRhoInv.insert(0, unitA).merge_slots((2, 1, 1))
    return RightComoduleAlgebra(Hq, p.result, rho, PhiRho,
                                PhiRhoInv=PhiRhoInv, name=p.result.name,
                                check=check)


def _induced_left(p: ProductAlgebra, Ab: BicomoduleAlgebra,
                  Bm: RightModuleAlgebra,
                  check: bool = True) -> LeftComoduleAlgebra:
    """lam(u x b) = u_-1 t1 (x) (u_0 t2 x b.t3)."""
    Hq = Ab.Hq
    H = Hq.H
    fld = Hq.field
    dims = p.dims
    N = prod(dims)
    theta = Ab.PhiLRInv

    def fn(idx):
        t = TensorElt.basis(fld, dims, unflatten(dims, idx[0]))
        t = t.apply_at(0, Ab.lam).insert(3, theta)
        t = t.mul_slots(0, 3, H).mul_slots(1, 3, Ab.A)
        t = t.apply_at(2, Bm.action)
        return t.merge_slots((1, 2))

    lam = linmap_from_fn(fld, (N,), (Hq.n, N), fn)
    unitB = Bm.unit_elt()
    PhiLam = Ab.left.PhiLam.insert(3, unitB).merge_slots((1, 1, 2))
    PhiLamInv = Ab.left.PhiLamInv.insert(3, unitB).merge_slots((1, 1, 2))
    return LeftComoduleAlgebra(Hq, p.result, lam, PhiLam,
                               PhiLamInv=PhiLamInv, name=p.result.name,
                               check=check)


def _induced_right_crossed(p: ProductAlgebra, Abi: BimoduleAlgebra,
                           Bb: BicomoduleAlgebra,
                           check: bool = True) -> RightComoduleAlgebra:
    """rho(a x p x b) = (a x t1.p x t2 b_0) (x) t3 b_1 on a
    generalized two-sided crossed product."""
    Hq = Bb.Hq
    H = Hq.H
    fld = Hq.field
    dims = p.dims
    N = prod(dims)
    theta = Bb.PhiLRInv

    def fn(idx):
        t = TensorElt.basis(fld, dims, unflatten(dims, idx[0]))
        t = t.apply_at(2, Bb.rho).insert(1, theta)
        t = t.permute((0, 1, 4, 2, 3, 5, 6)).apply_at(1, Abi.left)
        t = t.mul_slots(2, 4, Bb.A).mul_slots(3, 4, H)
        return t.merge_slots((3, 1))

    rho = linmap_from_fn(fld, (N,), (N, Hq.n), fn)
    uA = p.factors[0]
    uA = _right_part(uA).unit_elt()
    uP = Abi.unit_elt()
    PhiRho = Bb.right.PhiRho.insert(0, uP).insert(0, uA) \
        .merge_slots((3, 1, 1))
    PhiRhoInv = Bb.right.PhiRhoInv.insert(0, uP).insert(0, uA) \
        .merge_slots((3, 1, 1))
    return RightComoduleAlgebra(Hq, p.result, rho, PhiRho,
                                PhiRhoInv=PhiRhoInv, name=p.result.name,
                                check=check)


def _induced_left_crossed(p: ProductAlgebra, Ab: BicomoduleAlgebra,
                          Abi: BimoduleAlgebra,
                          check: bool = True) -> LeftComoduleAlgebra:
    """lam(b x p x c) = b_-1 t1 (x) (b_0 t2 x p.t3 x c)."""
    Hq = Ab.Hq
    H = Hq.H
    fld = Hq.field
    dims = p.dims
    N = prod(dims)
    theta = Ab.PhiLRInv

    def fn(idx):
        t = TensorElt.basis(fld, dims, unflatten(dims, idx[0]))
        t = t.apply_at(0, Ab.lam).insert(1, theta)
        t = t.mul_slots(0, 1, H).mul_slots(3, 1, Ab.A)
        t = t.permute((0, 2, 3, 1, 4)).apply_at(2, Abi.right)
        return t.merge_slots((1, 3))

    lam = linmap_from_fn(fld, (N,), (Hq.n, N), fn)
    uC = p.factors[2]
    uC = _left_part(uC).unit_elt()
    uP = Abi.unit_elt()
    PhiLam = Ab.left.PhiLam.insert(3, uP).insert(4, uC) \
        .merge_slots((1, 1, 3))
    PhiLamInv = Ab.left.PhiLamInv.insert(3, uP).insert(4, uC) \
        .merge_slots((1, 1, 3))
    return LeftComoduleAlgebra(Hq, p.result, lam, PhiLam,
                               PhiLamInv=PhiLamInv, name=p.result.name,
                               check=check)


def induced_costructures(p: ProductAlgebra, check: bool = True):
    """The comodule algebra structure a product algebra inherits from a
    bicomodule factor; a two-sided crossed product between two
    bicomodule factors returns a bicomodule algebra with trivial
    gluing element."""
    if p.kind == "Smash":
        Am = p.factors[0]
        Ab = regular_bicomodule(Am.Hq, check=False)
        return _induced_right(p, Am, Ab, check=check)
    if p.kind == "RightSmash":
        Bm = p.factors[0]
        Ab = regular_bicomodule(Bm.Hq, check=False)
        return _induced_left(p, Ab, Bm, check=check)
    if p.kind == "GenSmash":
        Am, Bfr = p.factors
        if not isinstance(Bfr, BicomoduleAlgebra):
            raise ValueError("comodule factor carries no right coaction")
        return _induced_right(p, Am, Bfr, check=check)
    if p.kind == "RightGenSmash":
        Afr, Bm = p.factors
        if not isinstance(Afr, BicomoduleAlgebra):
            raise ValueError("comodule factor carries no left coaction")
        return _induced_left(p, Afr, Bm, check=check)
    if p.kind == "GenTwoSidedCrossed":
        Afr, Abi, Bfr = p.factors
        right = isinstance(Bfr, BicomoduleAlgebra)
        left = isinstance(Afr, BicomoduleAlgebra)
        if left and right:
            lc = _induced_left_crossed(p, Afr, Abi, check=check)
            rc = _induced_right_crossed(p, Abi, Bfr, check=check)
            fld = Afr.field
            N = prod(p.dims)
            unitH = Afr.Hq.unit_elt()
            unitP = TensorElt.from_flat(fld, (N,), list(p.result.unit))
            PhiLR = unitH.tensor(unitP).tensor(unitH)
            return BicomoduleAlgebra(lc, rc, PhiLR, PhiLRInv=PhiLR,
                                     name=p.result.name, check=check)
        if right:
            return _induced_right_crossed(p, Abi, Bfr, check=check)
        if left:
            return _induced_left_crossed(p, Afr, Abi, check=check)
        raise ValueError("no bicomodule factor to induce a coaction from")
    raise ValueError(f"kind {p.kind!r} carries no induced costructure")
