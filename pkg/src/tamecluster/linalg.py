"""Exact linear algebra over the rationals.

Matrices are ``flint.fmpq_mat`` instances; scalars are ``fmpq``.  Every
routine here is exact: there is no tolerance anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

Matrix = flint.fmpq_mat
Scalar = flint.fmpq


def matrix(rows: Sequence[Sequence], nrows: int | None = None, ncols: int | None = None) -> Matrix:
    """Build a matrix from nested rows (ints, Fractions or fmpq)."""
    rows = [list(r) for r in rows]
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    flat = []
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged rows")
        flat.extend(_q(x) for x in r)
    return Matrix(nrows, ncols, flat)


def _q(x) -> Scalar:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    return flint.fmpq(x)


def zeros(r: int, c: int) -> Matrix:
    return Matrix(r, c)


def identity(n: int) -> Matrix:
    m = Matrix(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def column(values: Iterable) -> Matrix:
    vals = [_q(v) for v in values]
    return Matrix(len(vals), 1, vals)


def to_fractions(m: Matrix) -> list[list[Fraction]]:
    out = []
    for i in range(m.nrows()):
        row = []
        for j in range(m.ncols()):
            x = m[i, j]
            row.append(Fraction(int(x.p), int(x.q)))
        out.append(row)
    return out


def trace(m: Matrix) -> Scalar:
    t = Scalar(0)
    for i in range(min(m.nrows(), m.ncols())):
        t += m[i, i]
    return t


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for x in m.entries())


def hstack(blocks: Sequence[Matrix], nrows: int | None = None) -> Matrix:
    if nrows is None:
        nrows = blocks[0].nrows() if blocks else 0
    ncols = sum(b.ncols() for b in blocks)
    out = Matrix(nrows, ncols)
    off = 0
    for b in blocks:
        if b.nrows() != nrows:
            raise ValueError("hstack row mismatch")
        _paste(out, b, 0, off)
        off += b.ncols()
    return out


def vstack(blocks: Sequence[Matrix], ncols: int | None = None) -> Matrix:
    if ncols is None:
        ncols = blocks[0].ncols() if blocks else 0
    nrows = sum(b.nrows() for b in blocks)
    out = Matrix(nrows, ncols)
    off = 0
    for b in blocks:
        if b.ncols() != ncols:
            raise ValueError("vstack column mismatch")
        _paste(out, b, off, 0)
        off += b.nrows()
    return out


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    r = sum(b.nrows() for b in blocks)
    c = sum(b.ncols() for b in blocks)
    out = Matrix(r, c)
    ro = co = 0
    for b in blocks:
        _paste(out, b, ro, co)
        ro += b.nrows()
        co += b.ncols()
    return out


def _paste(out: Matrix, b: Matrix, ro: int, co: int) -> None:
    nc = b.ncols()
    if nc == 0:
        return
    for k, x in enumerate(b.entries()):
        if x != 0:
            out[ro + k // nc, co + k % nc] = x


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    out = Matrix(len(rows), len(cols))
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            x = m[r, c]
            if x != 0:
                out[i, j] = x
    return out


def columns(m: Matrix, cols: Sequence[int]) -> Matrix:
    return submatrix(m, range(m.nrows()), cols)


def rows_of(m: Matrix, rows: Sequence[int]) -> Matrix:
    return submatrix(m, rows, range(m.ncols()))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    if m.nrows() == 0 or m.ncols() == 0:
        return Matrix(m.nrows(), m.ncols()), []
    r, rk = m.rref()
    nc = m.ncols()
    ent = r.entries()
    pivots = []
    j = 0
    for i in range(rk):
        base = i * nc
        while ent[base + j] == 0:
            j += 1
        pivots.append(j)
        j += 1
    return r, pivots


def rank(m: Matrix) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return m.rank()


def kernel_matrix(m: Matrix) -> Matrix:
    """Columns form a basis of the null space of ``m``.

    Each basis vector has a 1 in its own free coordinate and 0 in the other
    free coordinates, so selecting the free rows is a left inverse.
    """
    nc = m.ncols()
    r, pivots = rref(m)
    pset = set(pivots)
    free = [j for j in range(nc) if j not in pset]
    k = Matrix(nc, len(free))
    if not free:
        return k
    ent = r.entries()
    for col, f in enumerate(free):
        k[f, col] = 1
        for i, p in enumerate(pivots):
            x = ent[i * nc + f]
            if x != 0:
                k[p, col] = -x
    return k


def kernel_free_rows(m: Matrix) -> list[int]:
    _, pivots = rref(m)
    pset = set(pivots)
    return [j for j in range(m.ncols()) if j not in pset]


def kernel_basis(m: Matrix) -> list[Matrix]:
    k = kernel_matrix(m)
    return [columns(k, [j]) for j in range(k.ncols())]


def left_kernel_matrix(m: Matrix) -> Matrix:
    """Rows form a basis of {y : y m = 0}."""
    return kernel_matrix(m.transpose()).transpose()


def solve(m: Matrix, b: Matrix) -> Matrix | None:
    """Some x with m x = b, or None when the system is inconsistent."""
    if b.nrows() != m.nrows():
        raise ValueError("right-hand side has wrong length")
    nc = m.ncols()
    nb = b.ncols()
    aug = hstack([m, b]) if m.nrows() else Matrix(0, nc + nb)
    r, pivots = rref(aug)
    if any(p >= nc for p in pivots):
        return None
    x = Matrix(nc, nb)
    for i, p in enumerate(pivots):
        for j in range(nb):
            x[p, j] = r[i, nc + j]
    return x


def column_basis(m: Matrix) -> Matrix:
    """Independent columns spanning the column space (in RREF form)."""
    if m.ncols() == 0 or m.nrows() == 0:
        return Matrix(m.nrows(), 0)
    r, pivots = rref(m.transpose())
    return rows_of(r, range(len(pivots))).transpose()


class QuotientSpace:
    """Quotient of Q^ambient by a subspace, with a fixed complement basis.

    The complement is spanned by the standard basis vectors at the non-pivot
    positions of the subspace, so coordinates are canonical for a given
    subspace.
    """

    def __init__(self, ambient_dim: int, subspace: Matrix):
        if subspace.nrows() != ambient_dim:
            raise ValueError("subspace vectors have the wrong length")
        self.ambient_dim = ambient_dim
        sub = column_basis(subspace) if subspace.ncols() else Matrix(ambient_dim, 0)
        self.sub = sub
        if sub.ncols():
            _, piv = rref(sub.transpose())
        else:
            piv = []
        pset = set(piv)
        self.complement_positions = [i for i in range(ambient_dim) if i not in pset]
        self.dim = len(self.complement_positions)
        if self.dim == 0:
            self._proj = Matrix(0, ambient_dim)
            return
        comp = Matrix(ambient_dim, self.dim)
        for j, i in enumerate(self.complement_positions):
            comp[i, j] = 1
        full = hstack([sub, comp])
        inv = full.inv()
        s = sub.ncols()
        self._proj = rows_of(inv, range(s, ambient_dim))

    def coords(self, v: Matrix) -> Matrix:
        if v.nrows() != self.ambient_dim:
            raise ValueError("vector has the wrong length")
        if self.dim == 0:
            return Matrix(0, v.ncols())
        return self._proj * v

    def lift(self, c: Matrix) -> Matrix:
        out = Matrix(self.ambient_dim, c.ncols())
        for j, i in enumerate(self.complement_positions):
            for k in range(c.ncols()):
                out[i, k] = c[j, k]
        return out


def quotient_coordinates(ambient_dim: int, subspace: Sequence[Matrix], v: Matrix) -> Matrix:
    for s in subspace:
        if s.nrows() != ambient_dim:
            raise ValueError("subspace vector has the wrong length")
    sub = hstack(list(subspace), nrows=ambient_dim) if subspace else Matrix(ambient_dim, 0)
    return QuotientSpace(ambient_dim, sub).coords(v)
