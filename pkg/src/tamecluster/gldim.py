"""End_B(M') as a basic algebra given by its multiplication table, and
projective dimensions over it.

Modules over E = End_B(M') are contravariant functors on add(M'): a module F
assigns a space F(i) to each summand M_i and, to each basis element a of
A(i, j) = Hom_B(M_i, M_j), a linear map F(a): F(j) -> F(i).  The
indecomposable projectives are the representables A(-, k) = Hom_B(-, M_k), and
Hom_B(M', X') is the module attached to a B-module X'.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg as la
from .cluster import BMRContext, ClusterObject, cluster_compose, scalar_part
from .linalg import Matrix


class GlDimError(ValueError):
    pass


# ---------------------------------------------------------------- the algebra


@dataclass
class EndAlgebra:
    names: list[str]
    dims: dict              # (i, j) -> dim A(i, j)
    mult: dict              # (i, j, k) -> [R_p]: R_p(b) = coords of b o a_p, A(j, k) -> A(i, k)
    scalars: dict           # i -> row of scalar parts of the basis of A(i, i)
    spaces: dict = field(default_factory=dict, repr=False)

    @property
    def m(self) -> int:
        return len(self.names)

    @property
    def dimension(self) -> int:
        return sum(self.dims.values())

    def radical_basis(self, i: int, j: int) -> Matrix:
        """Columns (coordinates in A(i, j)) spanning rad A(i, j)."""
        d = self.dims[(i, j)]
        if i != j:
            return la.identity(d)
        return la.kernel_matrix(la.matrix([self.scalars[i]], 1, d))

    def product(self, i: int, j: int, k: int, a: Matrix, b: Matrix) -> Matrix:
        """Coordinates of b o a for a in A(i, j), b in A(j, k) (coordinate columns)."""
        out = Matrix(self.dims[(i, k)], 1)
        for p, R in enumerate(self.mult.get((i, j, k), [])):
            if a[p, 0] != 0:
                out += a[p, 0] * (R * b)
        return out

    def loewy_length(self) -> int:
        """Least L with rad^L = 0."""
        m = self.m
        layer = {(i, j): self.radical_basis(i, j) for i in range(m) for j in range(m)}
        L = 1
        while any(M.ncols() for M in layer.values()):
            nxt = {}
            for i in range(m):
                for k in range(m):
                    cols = []
                    for j in range(m):
                        A, R = layer[(i, j)], self.radical_basis(j, k)
                        for x in range(A.ncols()):
                            for y in range(R.ncols()):
                                cols.append(self.product(i, j, k, la.columns(A, [x]), la.columns(R, [y])))
                    d = self.dims[(i, k)]
                    nxt[(i, k)] = la.column_basis(la.hstack(cols, nrows=d)) if cols else Matrix(d, 0)
            layer = nxt
            L += 1
            if L > self.dimension + 1:
                raise GlDimError("radical is not nilpotent")
        return L


def end_algebra(ctx: BMRContext, objs: list[ClusterObject]) -> EndAlgebra:
    m = len(objs)
    spaces = {(i, j): ctx.b_hom(objs[i], objs[j]) for i in range(m) for j in range(m)}
    dims = {k: H.dim for k, H in spaces.items()}
    mult = {}
    for i in range(m):
        for j in range(m):
            A = spaces[(i, j)]
            if not A.dim:
                continue
            for k in range(m):
                Bs, Cs = spaces[(j, k)], spaces[(i, k)]
                if not Bs.dim or not Cs.dim:
                    continue
                mats = []
                for a in A.basis:
                    cols = [Cs.coords(cluster_compose(b, a)) for b in Bs.basis]
                    mats.append(la.hstack(cols, nrows=Cs.dim))
                mult[(i, j, k)] = mats
    scalars = {i: [scalar_part(b) for b in spaces[(i, i)].basis] for i in range(m)}
    for i in range(m):
        if dims[(i, i)] == 0 or all(s == 0 for s in scalars[i]):
            raise GlDimError(f"summand {objs[i].name} vanishes in mod B")
    return EndAlgebra([o.name for o in objs], dims, mult, scalars, spaces)


def algebra_from_table(names: list[str], dims: dict, mult: dict, scalars: dict) -> EndAlgebra:
    """An EndAlgebra given directly by its multiplication table (used by oracles)."""
    full = {(i, j): dims.get((i, j), 0) for i in range(len(names)) for j in range(len(names))}
    return EndAlgebra(list(names), full, mult, scalars)


# ---------------------------------------------------------------- modules


@dataclass
class EModule:
    dims: list[int]
    act: dict               # (i, j) -> [F(a_p)], each dims[i] x dims[j]

    @property
    def total(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total == 0


def simple_module(E: EndAlgebra, j: int) -> EModule:
    dims = [1 if i == j else 0 for i in range(E.m)]
    act = {}
    for (a, b), d in E.dims.items():
        if not d:
            continue
        if a == b == j:
            act[(a, b)] = [la.matrix([[s]], 1, 1) for s in E.scalars[j]]
        else:
            act[(a, b)] = [Matrix(dims[a], dims[b]) for _ in range(d)]
    return EModule(dims, act)


def free_module(E: EndAlgebra, gens: list[int]) -> EModule:
    """The sum of the representables A(-, k) for k in gens."""
    dims = [sum(E.dims[(i, k)] for k in gens) for i in range(E.m)]
    act = {}
    for (i, j), d in E.dims.items():
        if not d:
            continue
        mats = []
        for p in range(d):
            blocks = []
            for k in gens:
                R = E.mult.get((i, j, k))
                blocks.append(R[p] if R else Matrix(E.dims[(i, k)], E.dims[(j, k)]))
            mats.append(la.block_diag(blocks) if blocks else Matrix(0, 0))
        act[(i, j)] = mats
    return EModule(dims, act)


def _radical_action(E: EndAlgebra, F: EModule, i: int, j: int) -> list[Matrix]:
    mats = F.act.get((i, j), [])
    if not mats:
        return []
    if i != j:
        return mats
    R = E.radical_basis(i, i)
    out = []
    for c in range(R.ncols()):
        acc = Matrix(F.dims[i], F.dims[j])
        for p in range(R.nrows()):
            if R[p, c] != 0:
                acc += R[p, c] * mats[p]
        out.append(acc)
    return out


def top_generators(E: EndAlgebra, F: EModule) -> list[tuple[int, Matrix]]:
    """Vectors spanning F modulo its radical, as (object, column)."""
    gens = []
    for i in range(E.m):
        if not F.dims[i]:
            continue
        cols = []
        for j in range(E.m):
            for A in _radical_action(E, F, i, j):
                if A.ncols():
                    cols.append(A)
        rad = la.hstack(cols, nrows=F.dims[i]) if cols else Matrix(F.dims[i], 0)
        for pos in la.QuotientSpace(F.dims[i], rad).complement_positions:
            x = Matrix(F.dims[i], 1)
            x[pos, 0] = 1
            gens.append((i, x))
    return gens


def syzygy(E: EndAlgebra, F: EModule) -> tuple[list[int], EModule]:
    """Minimal projective cover (as a list of objects) and its kernel."""
    gens = top_generators(E, F)
    objs = [k for k, _ in gens]
    P = free_module(E, objs)
    bases = []
    for i in range(E.m):
        # cover at object i: phi in A(i, k) -> F(phi) x
        cols = []
        for k, x in gens:
            for p in range(E.dims[(i, k)]):
                cols.append(F.act[(i, k)][p] * x)
        C = la.hstack(cols, nrows=F.dims[i]) if cols else Matrix(F.dims[i], 0)
        image = la.rank(C) if C.ncols() else 0
        if image != F.dims[i]:
            raise GlDimError("projective cover is not surjective")
        bases.append(la.kernel_matrix(C) if C.ncols() else Matrix(0, 0))
    dims = [B.ncols() for B in bases]
    act = {}
    for (i, j), d in E.dims.items():
        if not d:
            continue
        mats = []
        for p in range(d):
            if not dims[i] or not dims[j]:
                mats.append(Matrix(dims[i], dims[j]))
                continue
            img = P.act[(i, j)][p] * bases[j]
            sol = la.solve(bases[i], img)
            if sol is None:
                raise GlDimError("kernel is not a submodule")
            mats.append(sol)
        act[(i, j)] = mats
    return objs, EModule(dims, act)


@dataclass
class Resolution:
    terms: list[list[int]]      # objects of the projective terms P_0, P_1, ...

    @property
    def length(self) -> int:
        return len(self.terms) - 1


def minimal_resolution(E: EndAlgebra, F: EModule, cutoff: int = 10) -> Resolution:
    terms = []
    cur = F
    while not cur.is_zero():
        if len(terms) > cutoff:
            raise GlDimError(f"cutoff reached: projective dimension exceeds {cutoff}")
        objs, cur = syzygy(E, cur)
        terms.append(objs)
    return Resolution(terms)


def projective_dimension(E: EndAlgebra, F: EModule, cutoff: int = 10) -> int:
    if F.is_zero():
        return -1
    return minimal_resolution(E, F, cutoff).length


def global_dimension(E: EndAlgebra, cutoff: int = 10) -> int:
    if cutoff < 1:
        raise GlDimError("cutoff must be at least 1")
    return max(projective_dimension(E, simple_module(E, j), cutoff) for j in range(E.m))


# ---------------------------------------------------------------- Hom_B(M', X')


def hom_module(E: EndAlgebra, ctx: BMRContext, objs: list[ClusterObject], X: ClusterObject) -> EModule:
    """The E-module Hom_B(M', X'): F(i) = Hom_B(M_i, X'), a acts by precomposition."""
    Hs = [ctx.b_hom(o, X) for o in objs]
    dims = [H.dim for H in Hs]
    act = {}
    for (i, j), d in E.dims.items():
        if not d:
            continue
        A = E.spaces[(i, j)]
        mats = []
        for a in A.basis:
            if not dims[i] or not dims[j]:
                mats.append(Matrix(dims[i], dims[j]))
                continue
            cols = [Hs[i].coords(cluster_compose(phi, a)) for phi in Hs[j].basis]
            mats.append(la.hstack(cols, nrows=dims[i]))
        act[(i, j)] = mats
    return EModule(dims, act)


@dataclass
class ResolutionEntry:
    label: str
    sequence_exact: bool          # sequence (1) stays exact in mod B
    approximation: bool           # f' is a right add(M')-approximation
    pd: int                       # projective dimension of Hom_B(M', X')
    M0: list[str]
    M1: list[str]
    hom_dims: tuple[int, int, int]   # dim Hom_B(M', X'), Hom(M', M0), Hom(M', M1)

    @property
    def alternating_sum(self) -> int:
        return self.hom_dims[0] - self.hom_dims[1] + self.hom_dims[2]

    @property
    def ok(self) -> bool:
        return self.pd <= 1 and self.approximation and self.alternating_sum == 0


@dataclass
class ResolutionCertificate:
    entries: list[ResolutionEntry]

    @property
    def holds(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def sequence_exact_count(self) -> int:
        return sum(e.sequence_exact for e in self.entries)


def resolution_entry(E: EndAlgebra, G, label, cutoff: int = 10, sample=None) -> ResolutionEntry:
    """Minimal add(M')-resolution of X' read off the projective resolution of
    Hom_B(M', X') over End_B(M'); ``sample`` reuses a verify_sample result."""
    from .generator import verify_sample
    ctx = G.ctx
    objs = G.objects()
    X = ctx.C.obj(label)
    F = hom_module(E, ctx, objs, X)
    res = minimal_resolution(E, F, cutoff)
    M0 = [E.names[k] for k in res.terms[0]] if res.terms else []
    M1 = [E.names[k] for k in res.terms[1]] if len(res.terms) > 1 else []
    d0 = sum(E.dims[(i, k)] for i in range(E.m) for k in (res.terms[0] if res.terms else []))
    d1 = sum(E.dims[(i, k)] for i in range(E.m) for k in (res.terms[1] if len(res.terms) > 1 else []))
    s = sample or verify_sample(G, label)
    return ResolutionEntry(str(label), s.exact, s.approximation, res.length, M0, M1, (F.total, d0, d1))


def resolution_property(G, samples: list, E: EndAlgebra | None = None, cutoff: int = 10) -> ResolutionCertificate:
    E = E or end_algebra(G.ctx, G.objects())
    return ResolutionCertificate([resolution_entry(E, G, l, cutoff) for l in samples])
