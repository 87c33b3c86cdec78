"""Pure-Python kernels for the hot exact-arithmetic loops.

All functions are field-agnostic: scalars are Fractions or ints, added
and multiplied with the native operators; ``mod`` is ``None`` over the
rationals and the prime modulus over a prime field (reduction is applied
to every emitted scalar).  The compiled module ``_fast`` mirrors this
API exactly.
"""

from __future__ import annotations

BACKEND = "pure"


def mat_mul(a, b, mod=None):
    """Row-major matrix product with zero-skip on the left factor."""
    n = len(a)
    m = len(b)
    k = len(b[0]) if m else 0
    out = []
    for i in range(n):
        arow = a[i]
        acc = [0] * k
        for t in range(m):
            c = arow[t]
            if c == 0:
                continue
            brow = b[t]
            for j in range(k):
                x = brow[j]
                if x != 0:
                    acc[j] = acc[j] + c * x
        if mod is not None:
            acc = [v % mod for v in acc]
        out.append(acc)
    return out


def mat_vec(a, v, mod=None):
    out = []
    for row in a:
        s = 0
        for c, x in zip(row, v):
            if c != 0 and x != 0:
                s = s + c * x
        out.append(s if mod is None else s % mod)
    return out


def kron(a, b, mod=None):
    """Kronecker product; block (i,k) scaled by a[i][j] at column block j."""
    bn = len(b)
    bk = len(b[0]) if bn else 0
    out = []
    for arow in a:
        for bi in range(bn):
            brow = b[bi]
            row = []
            for c in arow:
                if c == 0:
                    row.extend([0] * bk)
                else:
                    if mod is None:
                        row.extend([c * x for x in brow])
                    else:
                        row.extend([(c * x) % mod for x in brow])
            out.append(row)
    return out


def bilinear(srows, u, v, n, mod=None):
    """Coordinates of the algebra product of coordinate vectors u, v.

    ``srows[i][j]`` is the sparse row [(k, c), ...] of the structure
    tensor: e_i e_j = sum_k c e_k.
    """
    acc = [0] * n
    for i in range(n):
        cu = u[i]
        if cu == 0:
            continue
        srow_i = srows[i]
        for j in range(n):
            cv = v[j]
            if cv == 0:
                continue
            cuv = cu * cv
            for k, c in srow_i[j]:
                acc[k] = acc[k] + cuv * c
    if mod is not None:
        acc = [x % mod for x in acc]
    return acc


def assoc_defects(srows, drows, n, mod=None, i_start=0, i_end=None, limit=None):
    """Exhaustive associativity scan over basis triples.

    Returns the list of triples (i, j, k) where (e_i e_j) e_k differs
    from e_i (e_j e_k).  ``drows[i][j]`` is the dense structure row.
    """
    if i_end is None:
        i_end = n
    bad = []
    for i in range(i_start, i_end):
        srows_i = srows[i]
        drows_i = drows[i]
        for j in range(n):
            sij = srows_i[j]
            srows_j = srows[j]
            for k in range(n):
                left = [0] * n
                for l, c in sij:
                    row = drows[l][k]
                    for t in range(n):
                        x = row[t]
                        if x != 0:
                            left[t] = left[t] + c * x
                right = [0] * n
                for m, c in srows_j[k]:
                    row = drows_i[m]
                    for t in range(n):
                        x = row[t]
                        if x != 0:
                            right[t] = right[t] + c * x
                if mod is None:
                    ok = left == right
                else:
                    ok = all((left[t] - right[t]) % mod == 0 for t in range(n))
                if not ok:
                    bad.append((i, j, k))
                    if limit is not None and len(bad) >= limit:
                        return bad
    return bad
