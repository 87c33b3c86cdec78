"""Sparse elements of tensor-product spaces and the slot combinators.

Every composite structure map in this package (coactions of coactions,
action-then-multiply chains, five-fold canonical elements) is written as
a short program over these combinators:

* ``apply_at``    - apply a LinMap to one or more adjacent slots
* ``mul_slots``   - multiply two slots inside an algebra factor
* ``permute``     - reorder slots
* ``tensor``      - juxtapose elements

Elements are stored sparsely as {multi-index tuple: scalar}; the flat
coordinate order is the row-major convention from linalg.
"""

from __future__ import annotations

from .fields import Field
from .linalg import LinMap, flat_index, prod, unflatten


class TensorElt:
    """Sparse element of V1 (x) ... (x) Vk (dims = factor dimensions)."""

    __slots__ = ("field", "dims", "terms")

    def __init__(self, field: Field, dims, terms=None, *, _clean=False):
        self.field = field
        self.dims = tuple(dims)
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            cleaned = {}
            for idx, c in terms.items():
                c = field.reduce(c)
                if c != 0:
                    cleaned[tuple(idx)] = c
            self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field: Field, dims) -> "TensorElt":
        return TensorElt(field, dims, {}, _clean=True)

    @staticmethod
    def basis(field: Field, dims, idx) -> "TensorElt":
        return TensorElt(field, dims, {tuple(idx): field.one()}, _clean=True)

    @staticmethod
    def scalar(field: Field, value) -> "TensorElt":
        return TensorElt(field, (), {(): value})

    @staticmethod
    def from_flat(field: Field, dims, vec) -> "TensorElt":
        dims = tuple(dims)
        terms = {}
        for f, c in enumerate(vec):
            if c != 0:
                terms[unflatten(dims, f)] = c
        return TensorElt(field, dims, terms)

    @staticmethod
    def from_vector(field: Field, vec) -> "TensorElt":
        """A single-slot element from a coordinate vector."""
        return TensorElt.from_flat(field, (len(vec),), vec)

    def to_flat(self):
        out = [self.field.zero()] * prod(self.dims)
        for idx, c in self.terms.items():
            out[flat_index(self.dims, idx)] = c
        return out

    # -- ring-module operations ---------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, TensorElt) and self.field == other.field
                and self.dims == other.dims and self.terms == other.terms)

    def __repr__(self):
        return f"TensorElt(dims={self.dims}, {len(self.terms)} terms)"

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElt") -> "TensorElt":
        if self.dims != other.dims:
            raise ValueError("slot shape mismatch")
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, 0) + c
        return TensorElt(self.field, self.dims, terms)

    def __sub__(self, other: "TensorElt") -> "TensorElt":
        return self + other.scale(self.field.neg(self.field.one()))

    def scale(self, c) -> "TensorElt":
        if c == 0:
            return TensorElt.zero(self.field, self.dims)
        return TensorElt(self.field, self.dims,
                         {idx: v * c for idx, v in self.terms.items()})

    # -- combinators ---------------------------------------------------------

    def tensor(self, other: "TensorElt") -> "TensorElt":
        if self.field != other.field:
            raise ValueError("field mismatch")
        terms = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                terms[ia + ib] = ca * cb
        return TensorElt(self.field, self.dims + other.dims, terms)

    def apply_at(self, pos: int, lm: LinMap) -> "TensorElt":
        """Apply ``lm`` to the ``len(lm.in_dims)`` slots starting at ``pos``."""
        a = len(lm.in_dims)
        if self.dims[pos:pos + a] != lm.in_dims:
            raise ValueError(
                f"slots {self.dims[pos:pos + a]} do not match map input "
                f"{lm.in_dims}")
        out_dims = lm.out_dims
        new_dims = self.dims[:pos] + out_dims + self.dims[pos + a:]
        mat = lm.mat
        terms = {}
        for idx, c in self.terms.items():
            col = flat_index(lm.in_dims, idx[pos:pos + a])
            head, tail = idx[:pos], idx[pos + a:]
            for r, mc in mat.sparse_col(col):
                nid = head + unflatten(out_dims, r) + tail
                terms[nid] = terms.get(nid, 0) + c * mc
        return TensorElt(self.field, new_dims, terms)

    def mul_slots(self, pos_a: int, pos_b: int, algebra) -> "TensorElt":
        """Multiply slot ``pos_a`` by slot ``pos_b`` (in that order) inside
        ``algebra``; the product lands at ``pos_a``'s position and slot
        ``pos_b`` is removed."""
        if pos_a == pos_b:
            raise ValueError("slots must differ")
        n = algebra.dim
        if self.dims[pos_a] != n or self.dims[pos_b] != n:
            raise ValueError("slot dimension does not match algebra")
        srows = algebra.sparse_rows()
        dst = pos_a if pos_a < pos_b else pos_a - 1
        new_dims = tuple(d for t, d in enumerate(self.dims) if t != pos_b)
        terms = {}
        for idx, c in self.terms.items():
            i, j = idx[pos_a], idx[pos_b]
            base = list(idx)
            del base[pos_b]
            for k, mc in srows[i][j]:
                base[dst] = k
                nid = tuple(base)
                terms[nid] = terms.get(nid, 0) + c * mc
        return TensorElt(self.field, new_dims, terms)

    def permute(self, perm) -> "TensorElt":
        """Reorder slots: output slot r carries the old slot ``perm[r]``."""
        if sorted(perm) != list(range(len(self.dims))):
            raise ValueError("not a permutation of the slots")
        new_dims = tuple(self.dims[p] for p in perm)
        terms = {tuple(idx[p] for p in perm): c for idx, c in self.terms.items()}
        return TensorElt(self.field, new_dims, terms, _clean=True)

    def drop_slot(self, pos: int, functional: LinMap) -> "TensorElt":
        """Apply a functional (out_dims = ()) to one slot."""
        if functional.out_dims != ():
            raise ValueError("not a functional")
        return self.apply_at(pos, functional)

    def insert(self, pos: int, other: "TensorElt") -> "TensorElt":
        """Tensor ``other`` into position ``pos``."""
        left_dims = self.dims[:pos]
        k = len(left_dims)
        terms = {}
        for ia, ca in self.terms.items():
            for ib, cb in other.terms.items():
                nid = ia[:k] + ib + ia[k:]
                terms[nid] = terms.get(nid, 0) + ca * cb
        return TensorElt(self.field, left_dims + other.dims + self.dims[pos:],
                         terms)


    def merge_slots(self, groups) -> "TensorElt":
        """Fuse consecutive runs of slots into single slots of product
        dimension (flat indexing); ``groups`` are the run lengths."""
        if sum(groups) != len(self.dims):
            raise ValueError("group lengths do not cover the slots")
        new_dims = []
        bounds = []
        pos = 0
        for g in groups:
            new_dims.append(prod(self.dims[pos:pos + g]))
            bounds.append((pos, pos + g))
            pos += g
        terms = {}
        for idx, c in self.terms.items():
            nid = tuple(flat_index(self.dims[lo:hi], idx[lo:hi])
                        for lo, hi in bounds)
            terms[nid] = terms.get(nid, 0) + c
        return TensorElt(self.field, tuple(new_dims), terms)

    def split_slot(self, pos: int, factors) -> "TensorElt":
        """Refine slot ``pos`` into tensor factors (flat indexing)."""
        factors = tuple(factors)
        if prod(factors) != self.dims[pos]:
            raise ValueError("factor dimensions do not match the slot")
        new_dims = self.dims[:pos] + factors + self.dims[pos + 1:]
        terms = {}
        for idx, c in self.terms.items():
            nid = idx[:pos] + unflatten(factors, idx[pos]) + idx[pos + 1:]
            terms[nid] = c
        return TensorElt(self.field, new_dims, terms, _clean=True)


def slotwise_mul(a: TensorElt, b: TensorElt, algebras) -> TensorElt:
    """Product of two elements of A1 (x) ... (x) Ak, slot by slot.

    ``algebras`` is one algebra per slot (a single algebra is broadcast).
    """
    k = len(a.dims)
    if len(b.dims) != k:
        raise ValueError("slot count mismatch")
    if not isinstance(algebras, (list, tuple)):
        algebras = [algebras] * k
    srows = [alg.sparse_rows() for alg in algebras]
    # group the right factor by its first slot so that pairs whose first
    # slots multiply to zero are never visited
    groups: dict = {}
    for ib, cb in b.terms.items():
        groups.setdefault(ib[0], []).append((ib, cb))
    srows0 = srows[0]
    out = {}
    for ia, ca in a.terms.items():
        row0 = srows0[ia[0]]
        for j, matches in groups.items():
            if not row0[j]:
                continue
            for ib, cb in matches:
                # expand the slotwise products, bailing out on a zero slot
                partial = [((), ca * cb)]
                for t in range(k):
                    row = srows[t][ia[t]][ib[t]]
                    if not row:
                        partial = []
                        break
                    if len(row) == 1:
                        kk, mc = row[0]
                        partial = [(pref + (kk,), coef * mc)
                                   for pref, coef in partial]
                    else:
                        partial = [(pref + (kk,), coef * mc)
                                   for pref, coef in partial
                                   for kk, mc in row]
                for idx, coef in partial:
                    out[idx] = out.get(idx, 0) + coef
    return TensorElt(a.field, a.dims, out)


def linmap_from_fn(field: Field, in_dims, out_dims, fn) -> LinMap:
    """Build the matrix of a linear map from its values on basis tensors.

    ``fn(idx)`` must return a TensorElt with dims == out_dims.
    """
    from .linalg import Mat
    in_dims, out_dims = tuple(in_dims), tuple(out_dims)
    ncols = prod(in_dims)
    nrows = prod(out_dims)
    zero = field.zero()
    cols = []
    for f in range(ncols):
        res = fn(unflatten(in_dims, f))
        if res.dims != out_dims:
            raise ValueError("fn returned wrong slot shape")
        cols.append(res.to_flat())
    rows = [[cols[j][i] for j in range(ncols)] for i in range(nrows)]
    return LinMap(Mat(field, rows, ncols), in_dims, out_dims)
