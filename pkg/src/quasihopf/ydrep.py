"""Bimodule coalgebras, Yetter-Drinfeld modules, and module translations.

Three layers:

* ``BimoduleCoalgebra`` - a coalgebra in the category of two-sided
  H-modules, with ``dual_of_bimodule_coalgebra`` turning its linear dual
  into a bimodule algebra under convolution.
* ``YDModule`` over a datum (H, A, C): a left A-module with a right
  C-coaction satisfying the two mixed compatibilities; ``yd_to_module``
  and ``module_to_yd`` are the mutually inverse translations to left
  modules over the diagonal product C* >< A, with ``yd_roundtrip_check``
  certifying both round trips and the embedding-pairing formula.
* ``sec8_correspondences`` - the module-category translations for the
  two-sided smash product A # H # B-bar: splitting and recombining the
  three partial actions, deriving the right module-algebra action from
  the left one, and checking every defining relation of the target
  categories exhaustively.

Categories are never reified: a "category isomorphism" is exercised as a
translation of structure matrices that lands in the target axiom set,
with both round trips the identity.
"""

from __future__ import annotations

from .actions import (BimoduleAlgebra, LeftModuleAlgebra, RightModuleAlgebra,
                      bar_construction, dual_bimodule_algebra)
from .coactions import BicomoduleAlgebra, tilde_pq
from .fields import Field
from .finalg import FinAlgebra, Report
from .linalg import LinMap, Mat, prod, unflatten
from .products import ProductAlgebra, diag_crossed, two_sided_smash
from .quasihopf import QuasiHopfAlgebra
from .tensors import TensorElt, linmap_from_fn, slotwise_mul


def _mul_linmap(alg: FinAlgebra) -> LinMap:
    """Multiplication of ``alg`` as a LinMap (N, N) -> (N,)."""
    n = alg.dim
    fld = alg.field

    srows = alg.sparse_rows()

    def fn(idx):
        return TensorElt(fld, (n,),
                         {(k,): v for k, v in srows[idx[0]][idx[1]]})

    return linmap_from_fn(fld, (n, n), (n,), fn)


# -- bimodule coalgebras -----------------------------------------------------

class BimoduleCoalgebra:
    """A coalgebra carrying commuting left and right H-actions, with the
    comultiplication intertwining both actions and coassociative up to
    conjugation by the associator."""

    def __init__(self, Hq: QuasiHopfAlgebra, dim: int, comul: LinMap,
                 counit: LinMap, left: LinMap, right: LinMap,
                 name: str = "", check: bool = True):
        n = Hq.n
        if comul.in_dims != (dim,) or comul.out_dims != (dim, dim):
            raise ValueError("comultiplication must map (m,) -> (m, m)")
        if counit.in_dims != (dim,) or counit.out_dims != ():
            raise ValueError("counit must map (m,) -> scalars")
        if left.in_dims != (n, dim) or left.out_dims != (dim,):
            raise ValueError("left action must map (dim H, m) -> (m,)")
        if right.in_dims != (dim, n) or right.out_dims != (dim,):
            raise ValueError("right action must map (m, dim H) -> (m,)")
        self.Hq = Hq
        self.dim = dim
        self.comul = comul
        self.counit = counit
        self.left = left
        self.right = right
        self.name = name
        if check:
            self.verify().require(self.name or "bimodule coalgebra")

    @property
    def field(self) -> Field:
        return self.Hq.field

    def basis_elt(self, i: int) -> TensorElt:
        return TensorElt.basis(self.field, (self.dim,), (i,))

    def _act_phi(self, t: TensorElt, phi: TensorElt, side: str) -> TensorElt:
        """Multiply the three slots of ``t`` by the components of ``phi``
        through the left or right H-action."""
        if side == "left":
            t = t.insert(0, phi)
            # [p1, p2, p3, c1, c2, c3]
            t = t.permute((0, 3, 1, 4, 2, 5))
            t = t.apply_at(4, self.left).apply_at(2, self.left)
            return t.apply_at(0, self.left)
        t = t.insert(3, phi)
        # [c1, c2, c3, p1, p2, p3]
        t = t.permute((0, 3, 1, 4, 2, 5))
        t = t.apply_at(4, self.right).apply_at(2, self.right)
        return t.apply_at(0, self.right)

    def verify(self) -> Report:
        rep = Report()
        Hq = self.Hq
        n, m = Hq.n, self.dim
        fld = self.field
        for i in range(m):
            c = self.basis_elt(i)
            d = c.apply_at(0, self.comul)
            rep.check(d.drop_slot(0, self.counit) == c,
                      "counit-left", f"basis c_{i}")
            rep.check(d.drop_slot(1, self.counit) == c,
                      "counit-right", f"basis c_{i}")
            # conjugating the twice-iterated comultiplication by the
            # associator moves the inner copy to the other side
            lhs = d.apply_at(0, self.comul)
            lhs = self._act_phi(lhs, Hq.Phi, "left")
            lhs = self._act_phi(lhs, Hq.PhiInv, "right")
            rhs = d.apply_at(1, self.comul)
            rep.check(lhs == rhs, "comul-coassociative", f"basis c_{i}")
        for ih in range(n):
            for i in range(m):
                hc = TensorElt.basis(fld, (n, m), (ih, i))
                ch = TensorElt.basis(fld, (m, n), (i, ih))
                # comultiplication intertwines both actions
                lhs = hc.apply_at(0, self.left).apply_at(0, self.comul)
                rhs = hc.apply_at(0, Hq.Delta).permute((0, 2, 1)) \
                    .apply_at(1, self.comul).permute((0, 1, 3, 2)) \
                    .apply_at(2, self.left).apply_at(0, self.left)
                rep.check(lhs == rhs, "comul-left-module",
                          f"basis (e_{ih}, c_{i})")
                lhs = ch.apply_at(0, self.right).apply_at(0, self.comul)
                rhs = ch.apply_at(1, Hq.Delta).apply_at(0, self.comul) \
                    .permute((0, 2, 1, 3)) \
                    .apply_at(2, self.right).apply_at(0, self.right)
                rep.check(lhs == rhs, "comul-right-module",
                          f"basis (c_{i}, e_{ih})")
                # counit is a morphism of modules on both sides
                lv = hc.apply_at(0, self.left).drop_slot(0, self.counit)
                rv = hc.drop_slot(1, self.counit).drop_slot(0, Hq.counit)
                rep.check(lv == rv, "counit-left-module",
                          f"basis (e_{ih}, c_{i})")
                lv = ch.apply_at(0, self.right).drop_slot(0, self.counit)
                rv = ch.drop_slot(0, self.counit).drop_slot(0, Hq.counit)
                rep.check(lv == rv, "counit-right-module",
                          f"basis (c_{i}, e_{ih})")
                # the two actions commute
                for jh in range(n):
                    hch = TensorElt.basis(fld, (n, m, n), (ih, i, jh))
                    lhs = hch.apply_at(1, self.right).apply_at(0, self.left)
                    rhs = hch.apply_at(0, self.left).apply_at(0, self.right)
                    rep.check(lhs == rhs, "actions-commute",
                              f"basis (e_{ih}, c_{i}, e_{jh})")
        return rep


def regular_bimodule_coalgebra(Hq: QuasiHopfAlgebra,
                               check: bool = True) -> BimoduleCoalgebra:
    """H itself, with its comultiplication and multiplication actions."""
    mul = _mul_linmap(Hq.H)
    return BimoduleCoalgebra(Hq, Hq.n, Hq.Delta, Hq.counit, mul, mul,
                             name=Hq.name, check=check)


def dual_of_bimodule_coalgebra(C: BimoduleCoalgebra,
                               check: bool = True) -> BimoduleAlgebra:
    """The convolution algebra on the dual coordinates of C, a bimodule
    algebra with (h -> c* <- h')(c) = c*(h'.c.h)."""
    Hq = C.Hq
    fld = C.field
    n, m = Hq.n, C.dim
    zero = fld.zero()
    # (e^i e^j)(c_k) = coefficient of (i, j) in comul(c_k)
    mul = [[[zero] * m for _ in range(m)] for _ in range(m)]
    for k in range(m):
        d = C.basis_elt(k).apply_at(0, C.comul)
        for (i, j), v in d.terms.items():
            mul[i][j][k] = v
    unit = [C.basis_elt(k).drop_slot(0, C.counit).terms.get((), zero)
            for k in range(m)]
    dual = FinAlgebra(fld, mul, unit,
                      name=f"{C.name}*" if C.name else "", check=False)

    def left_fn(idx):
        ih, i = idx
        out = {}
        for k in range(m):
            t = TensorElt.basis(fld, (m, n), (k, ih)).apply_at(0, C.right)
            v = t.terms.get((i,))
            if v:
                out[(k,)] = v
        return TensorElt(fld, (m,), out)

    def right_fn(idx):
        i, ih = idx
        out = {}
        for k in range(m):
            t = TensorElt.basis(fld, (n, m), (ih, k)).apply_at(0, C.left)
            v = t.terms.get((i,))
            if v:
                out[(k,)] = v
        return TensorElt(fld, (m,), out)

    left = linmap_from_fn(fld, (n, m), (m,), left_fn)
    right = linmap_from_fn(fld, (m, n), (m,), right_fn)
    return BimoduleAlgebra(Hq, dual, left, right, name=dual.name,
                           check=check)


# -- Yetter-Drinfeld modules -------------------------------------------------

class YDModule:
    """A left module over the bicomodule algebra A together with a right
    C-coaction, compatible with the two-sided costructure of A."""

    def __init__(self, Hq: QuasiHopfAlgebra, Ab: BicomoduleAlgebra,
                 C: BimoduleCoalgebra, dim: int, act: LinMap, coact: LinMap,
                 name: str = "", check: bool = True):
        mU, mC = Ab.A.dim, C.dim
        if act.in_dims != (mU, dim) or act.out_dims != (dim,):
            raise ValueError("action must map (dim A, m) -> (m,)")
        if coact.in_dims != (dim,) or coact.out_dims != (dim, mC):
            raise ValueError("coaction must map (m,) -> (m, dim C)")
        self.Hq = Hq
        self.Ab = Ab
        self.C = C
        self.dim = dim
        self.act = act
        self.coact = coact
        self.name = name
        if check:
            self.verify().require(self.name or "Yetter-Drinfeld module")

    @property
    def field(self) -> Field:
        return self.Hq.field

    def basis_elt(self, i: int) -> TensorElt:
        return TensorElt.basis(self.field, (self.dim,), (i,))

    def verify(self) -> Report:
        rep = Report()
        Hq, Ab, C = self.Hq, self.Ab, self.C
        fld = self.field
        mU, mM = Ab.A.dim, self.dim
        mulU = _mul_linmap(Ab.A)
        unitU = Ab.unit_elt()
        th = Ab.PhiLRInv
        xl = Ab.left.PhiLamInv
        xr = Ab.right.PhiRhoInv
        for im in range(mM):
            em = self.basis_elt(im)
            rep.check(unitU.tensor(em).apply_at(0, self.act) == em,
                      "unit-action", f"basis m_{im}")
            rep.check(em.apply_at(0, self.coact).drop_slot(1, C.counit)
                      == em, "coaction-counit", f"basis m_{im}")
            # coassociativity up to the three mixed associators:
            # coact twice on th2.m, then decorate with th1/th3, equals
            # comul after one coact on xl3.m decorated with the inverse
            # lambda and rho associators
            t = em.apply_at(0, self.coact).insert(0, th)
            # [t1, t2, t3, m0, m1]
            t = t.permute((0, 1, 3, 2, 4)).apply_at(1, self.act)
            t = t.apply_at(1, self.coact)
            # [t1, n0, n1, t3, m1]
            t = t.permute((1, 2, 0, 3, 4)).apply_at(1, C.right)
            lhs = t.apply_at(2, C.left)
            t = xl.insert(3, em).apply_at(2, self.act)
            t = t.apply_at(2, self.coact).apply_at(3, C.comul)
            # [x1l, x2l, w0, w11, w12]
            t = t.insert(0, xr)
            # [xr1, xr2, xr3, x1l, x2l, w0, w11, w12]
            t = t.permute((0, 5, 1, 2, 3, 4, 6, 7)).apply_at(0, self.act)
            # [W0, xr2, xr3, x1l, x2l, w11, w12]
            t = t.permute((0, 1, 5, 2, 3, 4, 6)).apply_at(1, C.left)
            # [W0, A1, xr3, x1l, x2l, w12]
            t = t.permute((0, 1, 3, 2, 4, 5)).apply_at(1, C.right)
            # [W0, C1, xr3, x2l, w12]
            t = t.permute((0, 1, 2, 4, 3)).apply_at(2, C.left)
            rhs = t.apply_at(2, C.right)
            rep.check(lhs == rhs, "mixed-coassociativity", f"basis m_{im}")
            for iu in range(mU):
                u = TensorElt.basis(fld, (mU,), (iu,))
                # associativity of the A-action
                for ju in range(mU):
                    t = TensorElt.basis(fld, (mU, mU, mM), (iu, ju, im))
                    lhs = t.apply_at(0, mulU).apply_at(0, self.act)
                    rhs = t.apply_at(1, self.act).apply_at(0, self.act)
                    rep.check(lhs == rhs, "action-associative",
                              f"basis (u_{iu}, u_{ju}, m_{im})")
                # the coaction intertwines the action through the two
                # one-sided coactions of A
                t = u.apply_at(0, Ab.rho).insert(2, em)
                t = t.apply_at(2, self.coact).permute((0, 2, 1, 3))
                t = t.apply_at(0, self.act)
                lhs = t.apply_at(1, C.left)
                t = u.apply_at(0, Ab.lam).insert(2, em)
                t = t.apply_at(1, self.act).apply_at(1, self.coact)
                rhs = t.permute((1, 2, 0)).apply_at(1, C.right)
                rep.check(lhs == rhs, "action-coaction-exchange",
                          f"basis (u_{iu}, m_{im})")
        return rep


def mixed_translation_identity(Ab: BicomoduleAlgebra) -> bool:
    """th-bar1 th1 (x) th-bar2 th2_<0> p~1 (x) th-bar3 th2_<1> p~2 S(th3)
    = (p~1)_[-1] (x) (p~1)_[0] (x) p~2, the helper identity behind the
    coaction formula of the reverse translation."""
    Hq = Ab.Hq
    H = Hq.H
    Ualg = Ab.A
    p = tilde_pq(Ab.right, check=False).p
    t = Ab.PhiLRInv.apply_at(1, Ab.rho).apply_at(3, Hq.S)
    # [t1, t20, t21, St3]
    t = t.insert(2, p)
    # [t1, t20, p1, p2, t21, St3]
    t = t.mul_slots(1, 2, Ualg)
    # [t1, t20 p1, p2, t21, St3]
    t = t.mul_slots(3, 2, H)
    # [t1, M, t21 p2, St3]
    t = t.mul_slots(2, 3, H)
    lhs = slotwise_mul(Ab.PhiLRInv, t, [H, Ualg, H])
    rhs = p.apply_at(0, Ab.lam)
    return lhs == rhs


def yd_product(Ab: BicomoduleAlgebra, C: BimoduleCoalgebra,
               check: bool = True):
    """The diagonal product C* >< A carrying the translated modules."""
    dual = dual_of_bimodule_coalgebra(C, check=check)
    return dual, diag_crossed(dual, Ab, "bowtie", check=check)


def yd_to_module(M: YDModule, prod: ProductAlgebra | None = None,
                 check: bool = True):
    """(c* >< u) m = <c*, q~2 . (u.m)_(1)> q~1 . (u.m)_(0): the left
    module over C* >< A carried by a Yetter-Drinfeld module."""
    Hq, Ab, C = M.Hq, M.Ab, M.C
    fld = M.field
    mU, mC, mM = Ab.A.dim, C.dim, M.dim
    if prod is None:
        _, prod = yd_product(Ab, C, check=False)
    q = tilde_pq(Ab.right, check=False).q

    def fn(idx):
        k, im = idx
        i, iu = unflatten((mC, mU), k)
        t = TensorElt.basis(fld, (mU, mM), (iu, im)).apply_at(0, M.act)
        t = t.apply_at(0, M.coact).insert(0, q)
        # [q1, q2, m0, m1]
        t = t.permute((0, 2, 1, 3)).apply_at(2, C.left)
        t = t.apply_at(0, M.act)
        # [q1 m0, q2 m1]
        return TensorElt(fld, (mM,), {(a,): v for (a, c), v
                                      in t.terms.items() if c == i})

    act = linmap_from_fn(fld, (mC * mU, mM), (mM,), fn)
    return FinModule(prod.result, mM, act, name=M.name, check=check)


class FinModule:
    """A left module over a finite-dimensional algebra, verified on all
    basis pairs."""

    def __init__(self, algebra: FinAlgebra, dim: int, act: LinMap,
                 name: str = "", check: bool = True):
        if act.in_dims != (algebra.dim, dim) or act.out_dims != (dim,):
            raise ValueError("action must map (dim algebra, m) -> (m,)")
        self.algebra = algebra
        self.dim = dim
        self.act = act
        self.name = name
        if check:
            self.verify().require(self.name or "module")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def basis_elt(self, i: int) -> TensorElt:
        return TensorElt.basis(self.field, (self.dim,), (i,))

    def verify(self) -> Report:
        rep = Report()
        alg = self.algebra
        fld = self.field
        N, mM = alg.dim, self.dim
        mul = _mul_linmap(alg)
        unit = TensorElt.from_vector(fld, alg.unit)
        for im in range(mM):
            em = self.basis_elt(im)
            rep.check(unit.tensor(em).apply_at(0, self.act) == em,
                      "unit-action", f"basis m_{im}")
            for i in range(N):
                for j in range(N):
                    t = TensorElt.basis(fld, (N, N, mM), (i, j, im))
                    lhs = t.apply_at(0, mul).apply_at(0, self.act)
                    rhs = t.apply_at(1, self.act).apply_at(0, self.act)
                    rep.check(lhs == rhs, "action-associative",
                              f"basis (a_{i}, a_{j}, m_{im})")
        return rep


def regular_module(alg: FinAlgebra, check: bool = True) -> FinModule:
    """The algebra acting on itself by left multiplication."""
    return FinModule(alg, alg.dim, _mul_linmap(alg), name=alg.name,
                     check=check)


def module_to_yd(M: FinModule, Ab: BicomoduleAlgebra, C: BimoduleCoalgebra,
                 check: bool = True) -> YDModule:
    """u.m = (counit >< u) m and the coaction built from the canonical
    pair of the right coaction of A, inverse to ``yd_to_module``."""
    Hq = Ab.Hq
    fld = Hq.field
    mU, mC, mM = Ab.A.dim, C.dim, M.dim
    if M.algebra.dim != mC * mU:
        raise ValueError("module is not over the matching diagonal product")
    eps_terms = {}
    for k in range(mC):
        v = C.basis_elt(k).drop_slot(0, C.counit).terms.get((), fld.zero())
        if v != fld.zero():
            eps_terms[(k,)] = v
    eps = TensorElt(fld, (mC,), eps_terms)

    def act_fn(idx):
        iu, im = idx
        t = eps.tensor(TensorElt.basis(fld, (mU, mM), (iu, im)))
        return t.merge_slots((2, 1)).apply_at(0, M.act)

    act = linmap_from_fn(fld, (mU, mM), (mM,), act_fn)
    p = tilde_pq(Ab.right, check=False).p
    dual_pairs = TensorElt(fld, (mC, mC),
                           {(i, i): fld.one() for i in range(mC)})

    def coact_fn(idx):
        m = TensorElt.basis(fld, (mM,), idx)
        t = p.apply_at(0, Ab.lam).apply_at(2, Hq.SInv)
        # [pm, p0, S]
        t = t.insert(1, dual_pairs)
        # [pm, cdual, cC, p0, S]
        t = t.permute((0, 2, 4, 1, 3)).merge_slots((1, 1, 1, 2))
        # [pm, cC, S, cdual (x) p0]
        t = t.insert(4, m).apply_at(3, M.act)
        # [pm, cC, S, m']
        t = t.permute((3, 1, 0, 2)).apply_at(1, C.right)
        # [m', cC pm, S]
        t = t.permute((0, 2, 1)).apply_at(1, C.left)
        return t

    coact = linmap_from_fn(fld, (mM,), (mM, mC), coact_fn)
    return YDModule(Hq, Ab, C, mM, act, coact, name=M.name, check=check)


def yd_roundtrip_check(Hq: QuasiHopfAlgebra, Ab: BicomoduleAlgebra,
                       C: BimoduleCoalgebra,
                       M: FinModule | None = None) -> Report:
    """Both round trips of the two translations are the identity on the
    structure matrices, and the canonical bimodule embedding acts by the
    coaction pairing."""
    from .isomaps import gamma_map
    rep = Report()
    dual, prod = yd_product(Ab, C, check=False)
    if M is None:
        M = regular_module(prod.result, check=False)
    if not mixed_translation_identity(Ab):
        rep.add("translation-identity",
                "the canonical-pair rearrangement fails")
    yd = module_to_yd(M, Ab, C, check=True)
    back = yd_to_module(yd, prod, check=True)
    rep.check(back.act.mat == M.act.mat, "roundtrip",
              "module -> YD -> module changed the action")
    yd2 = module_to_yd(back, Ab, C, check=False)
    rep.check(yd2.act.mat == yd.act.mat and yd2.coact.mat == yd.coact.mat,
              "roundtrip", "YD -> module -> YD changed the structures")
    # the bimodule embedding acts by <c*, m_(1)> m_(0)
    fld = Hq.field
    mC, mM = C.dim, yd.dim
    gamma = gamma_map(dual, Ab, check=False)
    for i in range(mC):
        g = TensorElt(fld, (mC, Ab.A.dim),
                      {unflatten((mC, Ab.A.dim), r): v
                       for r, v in gamma.sparse_col(i)})
        for im in range(mM):
            m = yd.basis_elt(im)
            t = g.merge_slots((2,)).insert(1, m).apply_at(0, back.act)
            want = m.apply_at(0, yd.coact)
            want = TensorElt(fld, (mM,),
                             {(a,): v for (a, c), v in want.terms.items()
                              if c == i})
            rep.check(t == want, "embedding-pairing",
                      f"basis (c^{i}, m_{im})")
    return rep


# -- module-category translations for the two-sided smash product ------------

def sec8_correspondences(Hq: QuasiHopfAlgebra, Am: LeftModuleAlgebra,
                         Dm: LeftModuleAlgebra,
                         M: FinModule | None = None) -> Report:
    """Split a left module over A # H # D-bar into its three partial
    actions, verify every defining relation of the corresponding
    two-sided module category, derive the right D-action from the
    left one through the canonical pair, and certify both round trips."""
    rep = Report()
    fld = Hq.field
    n = Hq.n
    mA, mD = Am.A.dim, Dm.A.dim
    Dbar = bar_construction(Dm, check=False)
    prod = two_sided_smash(Am, Dbar, check=False)
    if M is None:
        M = regular_module(prod.result, check=False)
    if M.algebra.dim != prod.result.dim:
        raise ValueError("module is not over the two-sided smash product")
    mM = M.dim
    unitA = Am.unit_elt()
    unitH = Hq.unit_elt()
    unitD = TensorElt.from_vector(fld, Dbar.B.unit)

    def partial(pos, dim):
        def fn(idx):
            i, im = idx
            parts = [unitA, unitH, unitD]
            parts[pos] = TensorElt.basis(fld, (dim,), (i,))
            t = parts[0].tensor(parts[1]).tensor(parts[2])
            t = t.merge_slots((3,)).insert(1, M.basis_elt(im))
            return t.apply_at(0, M.act)
        return linmap_from_fn(fld, (dim, mM), (mM,), fn)

    actA = partial(0, mA)
    actH = partial(1, n)
    actB = partial(2, mD)

    for im in range(mM):
        em = M.basis_elt(im)
        # recombination: acting by a # h # b equals acting by the three
        # parts in order
        for k in range(prod.result.dim):
            ia, ih, ib = unflatten((mA, n, mD), k)
            t = TensorElt.basis(fld, (mA, n, mD, mM), (ia, ih, ib, im))
            got = t.apply_at(2, actB).apply_at(1, actH).apply_at(0, actA)
            want = t.merge_slots((3, 1)).apply_at(0, M.act)
            rep.check(got == want, "recombination",
                      f"basis ({ia},{ih},{ib},{im})")
        for ia in range(mA):
            for ja in range(mA):
                # left weak action relation against the associator
                t = TensorElt.basis(fld, (mA, mA, mM), (ia, ja, im))
                lhs = t.apply_at(1, actA).apply_at(0, actA)
                s = Hq.PhiInv.insert(3, t)
                # [x1, x2, x3, a, a', m]
                s = s.permute((0, 3, 1, 4, 2, 5))
                s = s.apply_at(2, Am.action).apply_at(0, Am.action)
                s = s.mul_slots(0, 1, Am.A)
                # [(x1 a)(x2 a'), x3, m]
                s = s.apply_at(1, actH)
                rhs = s.apply_at(0, actA)
                rep.check(lhs == rhs, "left-action-associator",
                          f"basis ({ia},{ja},{im})")
            for ih in range(n):
                # H compatibility of the left weak action
                t = TensorElt.basis(fld, (n, mA, mM), (ih, ia, im))
                lhs = t.apply_at(1, actA).apply_at(0, actH)
                s = t.apply_at(0, Hq.Delta).permute((1, 0, 2, 3))
                # [h2, h1, a, m]
                s = s.apply_at(1, Am.action).permute((1, 0, 2))
                rhs = s.apply_at(1, actH).apply_at(0, actA)
                rep.check(lhs == rhs, "left-action-H-compat",
                          f"basis ({ih},{ia},{im})")
        for ib in range(mD):
            b = TensorElt.basis(fld, (mD,), (ib,))
            for jb in range(mD):
                # right-module weak action relation
                t = TensorElt.basis(fld, (mD, mD, mM), (ib, jb, im))
                lhs = t.apply_at(1, actB).apply_at(0, actB)
                s = t.insert(2, Hq.PhiInv)
                # [b, b', x1, x2, x3, m]
                s = s.permute((2, 0, 3, 1, 4, 5))
                s = s.apply_at(3, Dbar.action).apply_at(1, Dbar.action)
                s = s.mul_slots(1, 2, Dbar.B)
                s = s.apply_at(1, actB)
                rhs = s.apply_at(0, actH)
                rep.check(lhs == rhs, "right-action-associator",
                          f"basis ({ib},{jb},{im})")
            for ih in range(n):
                t = TensorElt.basis(fld, (mD, n, mM), (ib, ih, im))
                lhs = t.apply_at(1, actH).apply_at(0, actB)
                s = t.apply_at(1, Hq.Delta).permute((1, 0, 2, 3))
                s = s.apply_at(1, Dbar.action).apply_at(1, actB)
                rhs = s.apply_at(0, actH)
                rep.check(lhs == rhs, "right-action-H-compat",
                          f"basis ({ib},{ih},{im})")
            for ia in range(mA):
                # exchanging the two weak actions across the associator
                t = TensorElt.basis(fld, (mD, mA, mM), (ib, ia, im))
                lhs = t.apply_at(1, actA).apply_at(0, actB)
                s = Hq.PhiInv.insert(3, t)
                # [y1, y2, y3, b, a, m]
                s = s.permute((0, 4, 1, 3, 2, 5))
                # [y1, a, y2, b, y3, m]
                s = s.apply_at(0, Am.action)
                s = s.apply_at(2, Dbar.action)
                # [y1 a, y2, b y3, m]
                s = s.apply_at(2, actB).apply_at(1, actH)
                rhs = s.apply_at(0, actA)
                rep.check(lhs == rhs, "weak-actions-exchange",
                          f"basis ({ib},{ia},{im})")

    # the derived right D-action m.d = q1 |> ((S(q2).d) * m)
    qR = Hq.canonical_qR()
    pR = Hq.canonical_pR()

    def right_fn(idx):
        im, idd = idx
        t = qR.apply_at(1, Hq.S)
        t = t.insert(2, TensorElt.basis(fld, (mD, mM), (idd, im)))
        # [q1, Sq2, d, m]
        t = t.apply_at(1, Dm.action).apply_at(1, actB)
        return t.apply_at(0, actH)

    actR = linmap_from_fn(fld, (mM, mD), (mM,), right_fn)
    X = Hq.Phi
    for im in range(mM):
        for idd in range(mD):
            d = TensorElt.basis(fld, (mD,), (idd,))
            for jd in range(mD):
                # the right action associates across the associator
                t = TensorElt.basis(fld, (mM, mD, mD), (im, idd, jd))
                lhs = t.apply_at(0, actR).apply_at(0, actR)
                s = X.insert(3, t)
                # [X1, X2, X3, m, d, d']
                s = s.permute((0, 3, 1, 4, 2, 5))
                s = s.apply_at(4, Dm.action).apply_at(2, Dm.action)
                s = s.apply_at(0, actH).mul_slots(1, 2, Dm.A)
                rhs = s.apply_at(0, actR)
                rep.check(lhs == rhs, "derived-right-associator",
                          f"basis ({im},{idd},{jd})")
            for ih in range(n):
                t = TensorElt.basis(fld, (n, mM, mD), (ih, im, idd))
                lhs = t.apply_at(1, actR).apply_at(0, actH)
                s = t.apply_at(0, Hq.Delta).permute((0, 2, 1, 3))
                # [h1, m, h2, d]
                s = s.apply_at(2, Dm.action).apply_at(0, actH)
                rhs = s.apply_at(0, actR)
                rep.check(lhs == rhs, "derived-right-H-compat",
                          f"basis ({ih},{im},{idd})")
            # round trip one: translating back through the canonical
            # pair recovers the weak action
            t = pR.insert(2, TensorElt.basis(fld, (mD, mM), (idd, im)))
            # [p1, p2, d, m]
            t = t.apply_at(1, Dm.action).permute((0, 2, 1))
            t = t.apply_at(0, actH).apply_at(0, actR)
            want = TensorElt.basis(fld, (mD, mM), (idd, im)) \
                .apply_at(0, actB)
            rep.check(t == want, "roundtrip-weak-action",
                      f"basis ({idd},{im})")
            # round trip two: rebuilding the right action from the
            # recovered weak action is the identity
            s = qR.apply_at(1, Hq.S)
            s = s.insert(2, TensorElt.basis(fld, (mD, mM), (idd, im)))
            s = s.apply_at(1, Dm.action)
            # [q1, S(q2) d, m] ; feed through the back-translated action
            s2 = s.insert(2, pR).permute((0, 2, 3, 1, 4))
            # [q1, p1, p2, S(q2) d, m]
            s2 = s2.apply_at(2, Dm.action).permute((0, 1, 3, 2))
            s2 = s2.apply_at(1, actH).apply_at(1, actR)
            got = s2.apply_at(0, actH)
            want = TensorElt.basis(fld, (mM, mD), (im, idd)) \
                .apply_at(0, actR)
            rep.check(got == want, "roundtrip-right-action",
                      f"basis ({im},{idd})")
            for ia in range(mA):
                # two-sided exchange across the associator
                t = TensorElt.basis(fld, (mA, mM, mD), (ia, im, idd))
                lhs = t.apply_at(0, actA).apply_at(0, actR)
                s = X.insert(3, t)
                # [X1, X2, X3, a, m, d]
                s = s.permute((0, 3, 1, 4, 2, 5))
                s = s.apply_at(0, Am.action).apply_at(3, Dm.action)
                # [X1 a, X2, m, X3 d]
                s = s.apply_at(1, actH).apply_at(1, actR)
                rhs = s.apply_at(0, actA)
                rep.check(lhs == rhs, "two-sided-exchange",
                          f"basis ({ia},{im},{idd})")
    return rep
