"""Quasi-bialgebras and quasi-Hopf algebras with exhaustive verifiers.

A quasi-bialgebra is an algebra H with coproduct Delta, counit eps and
an invertible associator Phi in H (x) H (x) H; coassociativity holds
only up to conjugation by Phi.  A quasi-Hopf algebra adds a bijective
antipode S together with distinguished elements alpha, beta.

All defining identities are checked on every basis element (or basis
tuple) of the relevant tensor power; verification returns a Report.
The module also provides the opposite/coopposite variants, gauge
twisting, the Drinfeld twist with its defining identities, and the
canonical elements q_L, q_R, p_R with their intertwining relations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finalg import (FinAlgebra, Report, check_algebra_map, invert_element,
                     opposite, tensor_algebra, tensor_power)
from .linalg import LinMap
from .tensors import TensorElt, linmap_from_fn, slotwise_mul


def _reduce_runs(t: TensorElt, alg, runs) -> TensorElt:
    """Multiply consecutive runs of slots: run lengths must sum to the
    slot count; each run collapses left to right into one slot."""
    if sum(runs) != len(t.dims):
        raise ValueError("run lengths do not cover the slots")
    pos = 0
    for r in runs:
        for _ in range(r - 1):
            t = t.mul_slots(pos, pos + 1, alg)
        pos += 1
    return t


class QuasiBialgebra:
    """Algebra + coproduct + counit + invertible associator."""

    def __init__(self, H: FinAlgebra, Delta: LinMap, counit: LinMap,
                 Phi: TensorElt, PhiInv: TensorElt | None = None,
                 name: str = ""):
        n = H.dim
        if Delta.in_dims != (n,) or Delta.out_dims != (n, n):
            raise ValueError("coproduct must map (n,) -> (n, n)")
        if counit.in_dims != (n,) or counit.out_dims != ():
            raise ValueError("counit must be a functional on (n,)")
        if Phi.dims != (n, n, n):
            raise ValueError("associator must live in three tensor factors")
        self.H = H
        self.field = H.field
        self.Delta = Delta
        self.counit = counit
        self.Phi = Phi
        self.name = name or H.name
        self._powers: dict[int, FinAlgebra] = {1: H}
        if PhiInv is None:
            PhiInv = self._invert_tensor(Phi)
            if PhiInv is None:
                raise ValueError("associator is not invertible")
        self.PhiInv = PhiInv

    def __repr__(self):
        label = self.name or type(self).__name__
        return f"{label}(dim={self.n} over {self.field})"

    # -- basic helpers -----------------------------------------------------

    @property
    def n(self) -> int:
        return self.H.dim

    def power_algebra(self, k: int) -> FinAlgebra:
        """H tensor itself k times, as a FinAlgebra (cached)."""
        if k not in self._powers:
            self._powers[k] = tensor_power(self.H, k)
        return self._powers[k]

    def unit_elt(self, k: int = 1) -> TensorElt:
        one = TensorElt.from_vector(self.field, self.H.unit)
        out = one
        for _ in range(k - 1):
            out = out.tensor(one)
        return out

    def basis_elt(self, i: int) -> TensorElt:
        return TensorElt.basis(self.field, (self.n,), (i,))

    def tmul(self, *factors: TensorElt) -> TensorElt:
        """Product of elements of the same tensor power, slot by slot."""
        out = factors[0]
        for f in factors[1:]:
            out = slotwise_mul(out, f, self.H)
        return out

    def eps_scalar(self, t: TensorElt):
        """Value of the counit on a single-slot element."""
        return t.drop_slot(0, self.counit).terms.get((), self.field.zero())

    def _invert_tensor(self, t: TensorElt) -> TensorElt | None:
        k = len(t.dims)
        alg = self.power_algebra(k)
        inv = invert_element(alg, alg.element(t.to_flat()))
        if inv is None:
            return None
        return TensorElt.from_flat(self.field, t.dims, inv.coords)

    # -- verification --------------------------------------------------------

    def verify(self) -> Report:
        rep = Report()
        n = self.n
        H2 = self.power_algebra(2)
        rep.merge(_tag(check_algebra_map(self.Delta.mat, self.H, H2),
                       "coproduct"))
        # counit multiplicativity and normalization
        for i in range(n):
            ei = self.basis_elt(i)
            eps_i = self.eps_scalar(ei)
            for j in range(n):
                ej = self.basis_elt(j)
                lhs = self.eps_scalar(ei.tensor(ej).mul_slots(0, 1, self.H))
                rhs = self.field.mul(eps_i, self.eps_scalar(ej))
                rep.check(lhs == rhs, "counit-multiplicative",
                          f"pair (e_{i}, e_{j})")
        rep.check(self.eps_scalar(self.unit_elt()) == self.field.one(),
                  "counit-unital", "eps(1) != 1")
        # Phi is invertible with the stored inverse
        one3 = self.unit_elt(3)
        rep.check(self.tmul(self.Phi, self.PhiInv) == one3,
                  "associator-inverse", "Phi PhiInv != 1")
        rep.check(self.tmul(self.PhiInv, self.Phi) == one3,
                  "associator-inverse", "PhiInv Phi != 1")
        # (id x Delta)Delta(h) = Phi ((Delta x id)Delta(h)) Phi^{-1}
        for i in range(n):
            d = self.basis_elt(i).apply_at(0, self.Delta)
            lhs = d.apply_at(1, self.Delta)
            rhs = self.tmul(self.Phi, d.apply_at(0, self.Delta), self.PhiInv)
            rep.check(lhs == rhs, "coassociativity", f"basis e_{i}")
        # (eps x id)Delta = id = (id x eps)Delta
        for i in range(n):
            ei = self.basis_elt(i)
            d = ei.apply_at(0, self.Delta)
            rep.check(d.drop_slot(0, self.counit) == ei,
                      "counit-left", f"basis e_{i}")
            rep.check(d.drop_slot(1, self.counit) == ei,
                      "counit-right", f"basis e_{i}")
        # pentagon:
        # (1 x Phi)(id x Delta x id)(Phi)(Phi x 1)
        #   = (id x id x Delta)(Phi) (Delta x id x id)(Phi)
        lhs = self.tmul(self.unit_elt().tensor(self.Phi),
                        self.Phi.apply_at(1, self.Delta),
                        self.Phi.tensor(self.unit_elt()))
        rhs = self.tmul(self.Phi.apply_at(2, self.Delta),
                        self.Phi.apply_at(0, self.Delta))
        rep.check(lhs == rhs, "pentagon")
        # counit kills the associator in every slot
        one2 = self.unit_elt(2)
        for pos, tag in ((1, "middle"), (0, "first"), (2, "last")):
            rep.check(self.Phi.drop_slot(pos, self.counit) == one2,
                      "associator-counit", f"{tag} slot")
        return rep


class QuasiHopfAlgebra(QuasiBialgebra):
    """Quasi-bialgebra with bijective antipode S and elements alpha, beta."""

    def __init__(self, H: FinAlgebra, Delta: LinMap, counit: LinMap,
                 Phi: TensorElt, S: LinMap, alpha: TensorElt, beta: TensorElt,
                 PhiInv: TensorElt | None = None, SInv: LinMap | None = None,
                 name: str = ""):
        super().__init__(H, Delta, counit, Phi, PhiInv, name=name)
        n = self.n
        if S.in_dims != (n,) or S.out_dims != (n,):
            raise ValueError("antipode must map (n,) -> (n,)")
        if alpha.dims != (n,) or beta.dims != (n,):
            raise ValueError("alpha and beta are single-slot elements")
        self.S = S
        if SInv is None:
            SInv = LinMap(S.mat.inv(), (n,), (n,))
        self.SInv = SInv
        self.alpha = alpha
        self.beta = beta
        self._drinfeld: DrinfeldTwist | None = None

    # -- verification --------------------------------------------------------

    def verify(self) -> Report:
        rep = super().verify()
        n = self.n
        rep.merge(_tag(check_algebra_map(self.S.mat, self.H, self.H,
                                         anti=True, unital=True), "antipode"))
        rep.check(self.S.mat.mul(self.SInv.mat).is_identity(),
                  "antipode-inverse")
        for i in range(n):
            ei = self.basis_elt(i)
            rep.check(self.eps_scalar(ei.apply_at(0, self.S))
                      == self.eps_scalar(ei), "counit-antipode",
                      f"basis e_{i}")
        rep.check(self.field.mul(self.eps_scalar(self.alpha),
                                 self.eps_scalar(self.beta))
                  == self.field.one(), "normalization",
                  "eps(alpha) eps(beta) != 1")
        # S(h_1) alpha h_2 = eps(h) alpha,  h_1 beta S(h_2) = eps(h) beta
        for i in range(n):
            ei = self.basis_elt(i)
            d = ei.apply_at(0, self.Delta)
            eps = self.eps_scalar(ei)
            lhs = _reduce_runs(d.apply_at(0, self.S).insert(1, self.alpha),
                               self.H, (3,))
            rep.check(lhs == self.alpha.scale(eps), "antipode-alpha",
                      f"basis e_{i}")
            lhs = _reduce_runs(d.apply_at(1, self.S).insert(1, self.beta),
                               self.H, (3,))
            rep.check(lhs == self.beta.scale(eps), "antipode-beta",
                      f"basis e_{i}")
        # X^1 beta S(X^2) alpha X^3 = 1,  S(x^1) alpha x^2 beta S(x^3) = 1
        one = self.unit_elt()
        t = self.Phi.apply_at(1, self.S).insert(1, self.beta) \
            .insert(3, self.alpha)
        rep.check(_reduce_runs(t, self.H, (5,)) == one, "zigzag",
                  "on the associator")
        t = self.PhiInv.apply_at(0, self.S).apply_at(2, self.S) \
            .insert(1, self.alpha).insert(3, self.beta)
        rep.check(_reduce_runs(t, self.H, (5,)) == one, "zigzag",
                  "on the inverse associator")
        return rep

    # -- opposite / coopposite variants ---------------------------------------

    def variant(self, op: bool = False, cop: bool = False) -> "QuasiHopfAlgebra":
        """The same data with multiplication and/or comultiplication
        reversed, carrying the matching associator, antipode, alpha, beta."""
        n = self.n
        H = opposite(self.H) if op else self.H
        if cop:
            swap = linmap_from_fn(
                self.field, (n, n), (n, n),
                lambda idx: TensorElt.basis(self.field, (n, n),
                                            (idx[1], idx[0])))
            Delta = LinMap(swap.mat.mul(self.Delta.mat), (n,), (n, n))
        else:
            Delta = self.Delta
        if op and cop:
            Phi, PhiInv = self.Phi.permute((2, 1, 0)), \
                self.PhiInv.permute((2, 1, 0))
            S, SInv = self.S, self.SInv
            alpha, beta = self.beta, self.alpha
        elif op:
            Phi, PhiInv = self.PhiInv, self.Phi
            S, SInv = self.SInv, self.S
            alpha = self.beta.apply_at(0, self.SInv)
            beta = self.alpha.apply_at(0, self.SInv)
        elif cop:
            Phi, PhiInv = self.PhiInv.permute((2, 1, 0)), \
                self.Phi.permute((2, 1, 0))
            S, SInv = self.SInv, self.S
            alpha = self.alpha.apply_at(0, self.SInv)
            beta = self.beta.apply_at(0, self.SInv)
        else:
            return self
        tags = ("op" if op else "") + ("," if op and cop else "") \
            + ("cop" if cop else "")
        name = f"{self.name}^{{{tags}}}" if self.name else ""
        return QuasiHopfAlgebra(H, Delta, self.counit, Phi, S, alpha, beta,
                                PhiInv=PhiInv, SInv=SInv, name=name)

    # -- gauge twisting --------------------------------------------------------

    def gauge_twist(self, F: TensorElt,
                    FInv: TensorElt | None = None) -> "QuasiHopfAlgebra":
        """Twist by an invertible F in H (x) H with (eps x id)F =
        (id x eps)F = 1; multiplication, counit and antipode survive."""
        n = self.n
        if F.dims != (n, n):
            raise ValueError("twist must live in two tensor factors")
        one = self.unit_elt()
        if F.drop_slot(0, self.counit) != one \
                or F.drop_slot(1, self.counit) != one:
            raise ValueError("twist is not counit-normalized")
        if FInv is None:
            FInv = self._invert_tensor(F)
            if FInv is None:
                raise ValueError("twist is not invertible")
        Delta_F = linmap_from_fn(
            self.field, (n,), (n, n),
            lambda idx: self.tmul(
                F, TensorElt.basis(self.field, (n,), idx).apply_at(
                    0, self.Delta), FInv))
        Phi_F = self.tmul(one.tensor(F), F.apply_at(1, self.Delta), self.Phi,
                          FInv.apply_at(0, self.Delta), FInv.tensor(one))
        PhiInv_F = self.tmul(F.tensor(one), F.apply_at(0, self.Delta),
                             self.PhiInv, FInv.apply_at(1, self.Delta),
                             one.tensor(FInv))
        alpha_F = _reduce_runs(FInv.apply_at(0, self.S).insert(1, self.alpha),
                               self.H, (3,))
        beta_F = _reduce_runs(F.apply_at(1, self.S).insert(1, self.beta),
                              self.H, (3,))
        name = f"{self.name}_F" if self.name else ""
        return QuasiHopfAlgebra(self.H, Delta_F, self.counit, Phi_F, self.S,
                                alpha_F, beta_F, PhiInv=PhiInv_F,
                                SInv=self.SInv, name=name)

    # -- the Drinfeld twist ------------------------------------------------------

    def drinfeld_twist(self) -> "DrinfeldTwist":
        """The canonical twist f with f Delta(S(h)) f^{-1} =
        (S x S)(swap Delta(h)), plus its companions gamma, delta."""
        if self._drinfeld is not None:
            return self._drinfeld
        one = self.unit_elt()
        A4 = self.tmul(self.Phi.tensor(one),
                       self.PhiInv.apply_at(0, self.Delta))
        B4 = self.tmul(self.Phi.apply_at(0, self.Delta),
                       self.PhiInv.tensor(one))
        # gamma = S(A^2) alpha A^3 (x) S(A^1) alpha A^4
        t = A4.apply_at(0, self.S).apply_at(1, self.S).permute((1, 2, 0, 3))
        gamma = _reduce_runs(t.insert(1, self.alpha).insert(4, self.alpha),
                             self.H, (3, 3))
        # delta = B^1 beta S(B^4) (x) B^2 beta S(B^3)
        t = B4.apply_at(2, self.S).apply_at(3, self.S).permute((0, 3, 1, 2))
        delta = _reduce_runs(t.insert(1, self.beta).insert(4, self.beta),
                             self.H, (3, 3))
        # f = (S x S)(swap Delta(x^1)) gamma Delta(x^2 beta S(x^3))
        t = self.PhiInv.apply_at(2, self.S).insert(2, self.beta)
        t = _reduce_runs(t, self.H, (1, 3))
        t = t.apply_at(1, self.Delta).apply_at(0, self.Delta)
        t = t.apply_at(0, self.S).apply_at(1, self.S).permute((1, 0, 2, 3))
        t = t.insert(2, gamma).permute((0, 2, 4, 1, 3, 5))
        f = _reduce_runs(t, self.H, (3, 3))
        # f^{-1} = Delta(S(x^1) alpha x^2) delta (S x S)(swap Delta(x^3))
        t = self.PhiInv.apply_at(0, self.S).insert(1, self.alpha)
        t = _reduce_runs(t, self.H, (3, 1))
        t = t.apply_at(0, self.Delta).apply_at(2, self.Delta)
        t = t.apply_at(2, self.S).apply_at(3, self.S).permute((0, 1, 3, 2))
        t = t.insert(2, delta).permute((0, 2, 4, 1, 3, 5))
        f_inv = _reduce_runs(t, self.H, (3, 3))
        self._drinfeld = DrinfeldTwist(f, f_inv, gamma, delta)
        return self._drinfeld

    def verify_drinfeld(self) -> Report:
        rep = Report()
        dt = self.drinfeld_twist()
        one2 = self.unit_elt(2)
        rep.check(self.tmul(dt.f, dt.f_inv) == one2, "twist-inverse",
                  "f f^{-1} != 1")
        rep.check(self.tmul(dt.f_inv, dt.f) == one2, "twist-inverse",
                  "f^{-1} f != 1")
        rep.check(self.tmul(dt.f, self.alpha.apply_at(0, self.Delta))
                  == dt.gamma, "twist-gamma")
        rep.check(self.tmul(self.beta.apply_at(0, self.Delta), dt.f_inv)
                  == dt.delta, "twist-delta")
        # f Delta(S(h)) f^{-1} = (S x S)(swap Delta(h))
        for i in range(self.n):
            ei = self.basis_elt(i)
            lhs = self.tmul(dt.f,
                            ei.apply_at(0, self.S).apply_at(0, self.Delta),
                            dt.f_inv)
            rhs = ei.apply_at(0, self.Delta).permute((1, 0)) \
                .apply_at(0, self.S).apply_at(1, self.S)
            rep.check(lhs == rhs, "antipode-anticoalgebra", f"basis e_{i}")
        # the associator twisted by f is (S x S x S)(X^3 (x) X^2 (x) X^1)
        twisted = self.gauge_twist(dt.f, FInv=dt.f_inv)
        target = self.Phi.permute((2, 1, 0)) \
            .apply_at(0, self.S).apply_at(1, self.S).apply_at(2, self.S)
        rep.check(twisted.Phi == target, "twisted-associator")
        return rep

    # -- canonical elements -----------------------------------------------------

    def canonical_qL(self) -> TensorElt:
        """q_L = S(x^1) alpha x^2 (x) x^3."""
        t = self.PhiInv.apply_at(0, self.S).insert(1, self.alpha)
        return _reduce_runs(t, self.H, (3, 1))

    def canonical_qR(self) -> TensorElt:
        """q_R = X^1 (x) S^{-1}(alpha X^3) X^2."""
        t = self.Phi.insert(2, self.alpha).mul_slots(2, 3, self.H)
        return t.apply_at(2, self.SInv).mul_slots(2, 1, self.H)

    def canonical_pR(self) -> TensorElt:
        """p_R = x^1 (x) x^2 beta S(x^3)."""
        t = self.PhiInv.apply_at(2, self.S).insert(2, self.beta)
        return _reduce_runs(t, self.H, (1, 3))

    def verify_canonical(self) -> Report:
        rep = Report()
        qL, qR, pR = self.canonical_qL(), self.canonical_qR(), \
            self.canonical_pR()
        for i in range(self.n):
            ei = self.basis_elt(i)
            d = ei.apply_at(0, self.Delta)
            # (S(h_1) (x) 1) q_L Delta(h_2) = (1 (x) h) q_L
            t = d.apply_at(0, self.S).apply_at(1, self.Delta)
            t = t.insert(1, qL).permute((0, 1, 3, 2, 4))
            lhs = _reduce_runs(t, self.H, (3, 2))
            rhs = qL.insert(2, ei).mul_slots(2, 1, self.H)
            rep.check(lhs == rhs, "left-intertwiner", f"basis e_{i}")
            # (1 (x) S^{-1}(h_2)) q_R Delta(h_1) = (h (x) 1) q_R
            t = d.apply_at(1, self.SInv).apply_at(0, self.Delta)
            t = t.insert(2, qR).permute((2, 0, 4, 3, 1))
            lhs = _reduce_runs(t, self.H, (2, 3))
            rhs = qR.insert(0, ei).mul_slots(0, 1, self.H)
            rep.check(lhs == rhs, "right-intertwiner", f"basis e_{i}")
        # X^1 p^1_1 (x) X^2 p^1_2 (x) X^3 p^2
        #   = y^1 (x) y^2_1 p^1 (x) y^2_2 p^2 S(y^3)
        lhs = self.tmul(self.Phi, pR.apply_at(0, self.Delta))
        t = self.PhiInv.apply_at(1, self.Delta).apply_at(3, self.S)
        t = t.insert(3, pR).permute((0, 1, 3, 2, 4, 5))
        rhs = _reduce_runs(t, self.H, (1, 2, 3))
        rep.check(lhs == rhs, "pentagon-p")
        # q^1_1 y^1 (x) q^1_2 y^2 (x) S(q^2 y^3)
        #   = X^1 (x) q^1 X^2_1 (x) S(q^2 X^2_2) X^3
        t = qR.apply_at(0, self.Delta).tensor(self.PhiInv)
        t = t.mul_slots(2, 5, self.H).mul_slots(0, 3, self.H) \
             .mul_slots(1, 3, self.H)
        lhs = t.apply_at(2, self.S)
        t = self.Phi.apply_at(1, self.Delta).insert(1, qR)
        t = t.mul_slots(1, 3, self.H).mul_slots(2, 3, self.H)
        rhs = t.apply_at(2, self.S).mul_slots(2, 3, self.H)
        rep.check(lhs == rhs, "pentagon-q")
        return rep


def tensor_qh(H1: QuasiHopfAlgebra, H2: QuasiHopfAlgebra,
              name: str = "") -> QuasiHopfAlgebra:
    """The tensor-product quasi-Hopf algebra H1 (x) H2: componentwise
    coproduct and antipode, interleaved associator
    (X^1 x Y^1) x (X^2 x Y^2) x (X^3 x Y^3), alpha x alpha, beta x beta."""
    if H1.field != H2.field:
        raise ValueError("field mismatch")
    n1, n2 = H1.n, H2.n
    N = n1 * n2
    field = H1.field
    H = tensor_algebra(H1.H, H2.H)
    H.name = name or (f"{H1.name}(x){H2.name}"
                      if H1.name and H2.name else "")

    def coprod(idx):
        i, j = divmod(idx[0], n2)
        t = TensorElt.basis(field, (n1,), (i,)).apply_at(0, H1.Delta).tensor(
            TensorElt.basis(field, (n2,), (j,)).apply_at(0, H2.Delta))
        return t.permute((0, 2, 1, 3)).merge_slots((2, 2))

    Delta = linmap_from_fn(field, (N,), (N, N), coprod)
    counit = LinMap(H1.counit.mat.kron(H2.counit.mat), (N,), ())
    S = LinMap(H1.S.mat.kron(H2.S.mat), (N,), (N,))
    SInv = LinMap(H1.SInv.mat.kron(H2.SInv.mat), (N,), (N,))

    def interleave(a, b):
        return a.tensor(b).permute((0, 3, 1, 4, 2, 5)).merge_slots((2, 2, 2))

    Phi = interleave(H1.Phi, H2.Phi)
    PhiInv = interleave(H1.PhiInv, H2.PhiInv)
    alpha = H1.alpha.tensor(H2.alpha).merge_slots((2,))
    beta = H1.beta.tensor(H2.beta).merge_slots((2,))
    if not name and H1.name and H2.name:
        name = f"{H1.name}(x){H2.name}"
    return QuasiHopfAlgebra(H, Delta, counit, Phi, S, alpha, beta,
                            PhiInv=PhiInv, SInv=SInv, name=name)


@dataclass
class DrinfeldTwist:
    f: TensorElt
    f_inv: TensorElt
    gamma: TensorElt
    delta: TensorElt


def _tag(rep: Report, prefix: str) -> Report:
    out = Report()
    out.failures = [f"{prefix}/{msg}" for msg in rep.failures]
    return out
