"""Quivers, representations, morphisms, Hom and Ext^1 for path algebras.

Vertices are 0-based internally.  A representation stores one matrix per
arrow with ``rows = dim at target`` and ``cols = dim at source``.  Hom and
Ext^1 are read off the standard two-term complex

    d : (+)_v Hom(X_v, Y_v) -> (+)_a Hom(X_s(a), Y_t(a)),
        (phi_v) |-> (Y_a phi_s - phi_t X_a)_a

whose kernel is Hom(X, Y) and whose cokernel is Ext^1(X, Y).  An Ext class is
stored as a cocycle (one matrix per arrow) modulo the image of ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import flint

from . import linalg as la
from .linalg import Matrix


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self):
        for s, t in self.arrows:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise QuiverError(f"arrow ({s},{t}) out of range")
            if s == t:
                raise QuiverError("loops are not allowed")
        if self.topological_order() is None:
            raise QuiverError("quiver has an oriented cycle")

    def topological_order(self) -> list[int] | None:
        indeg = [0] * self.n
        for _, t in self.arrows:
            indeg[t] += 1
        order = []
        ready = [v for v in range(self.n) if indeg[v] == 0]
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return order if len(order) == self.n else None

    def arrows_into(self, v: int) -> list[int]:
        return [a for a, (_, t) in enumerate(self.arrows) if t == v]

    def arrows_out(self, v: int) -> list[int]:
        return [a for a, (s, _) in enumerate(self.arrows) if s == v]

    @cached_property
    def paths_from(self) -> list[dict[int, list[tuple[int, ...]]]]:
        """paths_from[i][w] = list of paths (arrow tuples) from i to w."""
        out = []
        order = self.topological_order()
        for i in range(self.n):
            table: dict[int, list[tuple[int, ...]]] = {w: [] for w in range(self.n)}
            table[i].append(())
            for v in order:
                for p in table[v]:
                    for a in self.arrows_out(v):
                        table[self.arrows[a][1]].append(p + (a,))
            out.append(table)
        return out

    def cartan(self) -> list[list[int]]:
        """cartan[i][w] = number of paths from i to w (= dim P_i at w)."""
        return [[len(self.paths_from[i][w]) for w in range(self.n)] for i in range(self.n)]

    def reversed_arrows(self, which: Sequence[int]) -> "Quiver":
        arrows = list(self.arrows)
        for a in which:
            s, t = arrows[a]
            arrows[a] = (t, s)
        return Quiver(self.n, tuple(arrows), self.name)

    def euler_form(self, x: Sequence[int], y: Sequence[int]) -> int:
        if len(x) != self.n or len(y) != self.n:
            raise QuiverError("dimension vectors have the wrong length")
        return sum(a * b for a, b in zip(x, y)) - sum(x[s] * y[t] for s, t in self.arrows)

    def symmetric_form(self, x: Sequence[int], y: Sequence[int]) -> int:
        return self.euler_form(x, y) + self.euler_form(y, x)


def euler_form(Q: Quiver, x: Sequence[int], y: Sequence[int]) -> int:
    return Q.euler_form(x, y)


class Representation:
    """A finite-dimensional representation over the rationals."""

    __slots__ = ("quiver", "dims", "maps", "name", "_cache", "__weakref__")

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Sequence[Matrix], name: str = ""):
        self.quiver = quiver
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != quiver.n:
            raise QuiverError("dimension vector has the wrong length")
        maps = list(maps)
        if len(maps) != len(quiver.arrows):
            raise QuiverError("need one matrix per arrow")
        for a, (s, t) in enumerate(quiver.arrows):
            m = maps[a]
            if not isinstance(m, Matrix):
                m = la.matrix(m, self.dims[t], self.dims[s])
                maps[a] = m
            if m.nrows() != self.dims[t] or m.ncols() != self.dims[s]:
                raise QuiverError(f"arrow {a}: matrix shape does not match the dimension vector")
        self.maps = tuple(maps)
        self.name = name
        self._cache: dict = {}

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<Rep {label}dim={list(self.dims)}>"

    def same_as(self, other: "Representation") -> bool:
        return self.quiver == other.quiver and self.dims == other.dims and all(
            a == b for a, b in zip(self.maps, other.maps)
        )

    def path_map(self, path: Sequence[int]) -> Matrix:
        """Matrix of the linear map along a path (arrow indices, first arrow first)."""
        if not path:
            raise QuiverError("empty path has no fixed vertex")
        m = self.maps[path[0]]
        for a in path[1:]:
            m = self.maps[a] * m
        return m


@dataclass
class Morphism:
    source: Representation
    target: Representation
    mats: list[Matrix]

    def __post_init__(self):
        for v in range(self.source.quiver.n):
            m = self.mats[v]
            if m.nrows() != self.target.dims[v] or m.ncols() != self.source.dims[v]:
                raise QuiverError("vertex map has the wrong shape")

    def is_morphism(self) -> bool:
        X, Y = self.source, self.target
        for a, (s, t) in enumerate(X.quiver.arrows):
            if Y.maps[a] * self.mats[s] != self.mats[t] * X.maps[a]:
                return False
        return True

    def compose(self, first: "Morphism") -> "Morphism":
        """self o first."""
        return Morphism(first.source, self.target, [a * b for a, b in zip(self.mats, first.mats)])

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target, [a + b for a, b in zip(self.mats, other.mats)])

    def scaled(self, c) -> "Morphism":
        c = flint.fmpq(c) if not isinstance(c, flint.fmpq) else c
        return Morphism(self.source, self.target, [m * c for m in self.mats])

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.mats)

    def rank_at(self, v: int) -> int:
        return la.rank(self.mats[v])


def zero_morphism(X: Representation, Y: Representation) -> Morphism:
    return Morphism(X, Y, [la.zeros(Y.dims[v], X.dims[v]) for v in range(X.quiver.n)])


def identity_morphism(X: Representation) -> Morphism:
    return Morphism(X, X, [la.identity(d) for d in X.dims])


# ---------------------------------------------------------------- layouts


def hom_layout(X: Representation, Y: Representation) -> list[int]:
    offs, o = [], 0
    for v in range(X.quiver.n):
        offs.append(o)
        o += Y.dims[v] * X.dims[v]
    offs.append(o)
    return offs


def cocycle_layout(X: Representation, Y: Representation) -> list[int]:
    offs, o = [], 0
    for s, t in X.quiver.arrows:
        offs.append(o)
        o += Y.dims[t] * X.dims[s]
    offs.append(o)
    return offs


def differential(X: Representation, Y: Representation) -> Matrix:
    """The matrix of d from the module docstring (row-major vectorisation)."""
    _check_same(X, Y)
    key = ("d", id(Y))
    hit = X._cache.get(key)
    if hit is not None and hit[0] is Y:
        return hit[1]
    Q = X.quiver
    ho = hom_layout(X, Y)
    co = cocycle_layout(X, Y)
    D = Matrix(co[-1], ho[-1])
    for a, (s, t) in enumerate(Q.arrows):
        xs, xt, ys, yt = X.dims[s], X.dims[t], Y.dims[s], Y.dims[t]
        if xs == 0 or yt == 0:
            continue
        ya = Y.maps[a].entries()
        xa = X.maps[a].entries()
        base = co[a]
        # + Y_a phi_s : entry (r, c) gets Y_a[r, k] * phi_s[k, c]
        for r in range(yt):
            for k in range(ys):
                y = ya[r * ys + k]
                if y == 0:
                    continue
                for c in range(xs):
                    D[base + r * xs + c, ho[s] + k * xs + c] += y
        # - phi_t X_a : entry (r, c) gets phi_t[r, k] * X_a[k, c]
        for k in range(xt):
            for c in range(xs):
                x = xa[k * xs + c]
                if x == 0:
                    continue
                for r in range(yt):
                    D[base + r * xs + c, ho[t] + r * xt + k] -= x
    X._cache[key] = (Y, D)
    return D


def _check_same(X: Representation, Y: Representation) -> None:
    if X.quiver != Y.quiver:
        raise QuiverError("representations live over different quivers")


def vec_to_mats(vec: Matrix, rows: Sequence[int], cols: Sequence[int], col: int = 0) -> list[Matrix]:
    out, o = [], 0
    for r, c in zip(rows, cols):
        m = Matrix(r, c)
        for i in range(r):
            for j in range(c):
                x = vec[o + i * c + j, col]
                if x != 0:
                    m[i, j] = x
        out.append(m)
        o += r * c
    return out


def mats_to_vec(mats: Sequence[Matrix]) -> Matrix:
    flat = []
    for m in mats:
        flat.extend(m.entries())
    return Matrix(len(flat), 1, flat)


# ---------------------------------------------------------------- Hom / Ext


class HomSpace:
    """Exact basis of Hom(X, Y) with coordinate extraction."""

    def __init__(self, X: Representation, Y: Representation):
        self.source, self.target = X, Y
        D = differential(X, Y)
        self.D = D
        self.K = la.kernel_matrix(D)
        self.free = la.kernel_free_rows(D)
        self.dim = self.K.ncols()
        self._rows = list(Y.dims)
        self._cols = list(X.dims)

    @cached_property
    def basis(self) -> list[Morphism]:
        return [Morphism(self.source, self.target, vec_to_mats(self.K, self._rows, self._cols, j)) for j in range(self.dim)]

    def element(self, coords: Sequence) -> Morphism:
        v = self.K * la.column(coords)
        return Morphism(self.source, self.target, vec_to_mats(v, self._rows, self._cols))

    def coords(self, f: Morphism) -> Matrix:
        v = mats_to_vec(f.mats)
        return la.rows_of(v, self.free)

    def coords_vec(self, v: Matrix) -> Matrix:
        return la.rows_of(v, self.free)

    def __len__(self) -> int:
        return self.dim


def hom_space(X: Representation, Y: Representation) -> HomSpace:
    _check_same(X, Y)
    key = ("hom", id(Y))
    hit = X._cache.get(key)
    if hit is not None and hit[0] is Y:
        return hit[1]
    H = HomSpace(X, Y)
    X._cache[key] = (Y, H)
    return H


def hom_dim(X: Representation, Y: Representation) -> int:
    D = differential(X, Y)
    return D.ncols() - la.rank(D)


@dataclass
class ExtClass:
    source: Representation
    target: Representation
    cocycle: list[Matrix]   # one matrix per arrow: X_s(a) -> Y_t(a)

    def vector(self) -> Matrix:
        return mats_to_vec(self.cocycle)

    def pushforward(self, g: Morphism) -> "ExtClass":
        """Class of g_* (Y -> Y')."""
        Q = self.source.quiver
        return ExtClass(self.source, g.target, [g.mats[t] * c for c, (s, t) in zip(self.cocycle, Q.arrows)])

    def pullback(self, f: Morphism) -> "ExtClass":
        """Class of f^* (X' -> X)."""
        Q = self.source.quiver
        return ExtClass(f.source, self.target, [c * f.mats[s] for c, (s, t) in zip(self.cocycle, Q.arrows)])

    def middle_term(self) -> Representation:
        """E in 0 -> Y -> E -> X -> 0 (coordinates: Y first)."""
        X, Y = self.source, self.target
        maps = []
        for a, (s, t) in enumerate(X.quiver.arrows):
            top = la.hstack([Y.maps[a], self.cocycle[a]], nrows=Y.dims[t])
            bot = la.hstack([la.zeros(X.dims[t], Y.dims[s]), X.maps[a]], nrows=X.dims[t])
            maps.append(la.vstack([top, bot], ncols=Y.dims[s] + X.dims[s]))
        return Representation(X.quiver, [y + x for y, x in zip(Y.dims, X.dims)], maps)


class ExtSpace:
    """Ext^1(X, Y) as cocycles modulo coboundaries."""

    def __init__(self, X: Representation, Y: Representation):
        self.source, self.target = X, Y
        D = differential(X, Y)
        self.quotient = la.QuotientSpace(D.nrows(), D)
        self.dim = self.quotient.dim
        Q = X.quiver
        self._rows = [Y.dims[t] for _, t in Q.arrows]
        self._cols = [X.dims[s] for s, _ in Q.arrows]

    @cached_property
    def basis(self) -> list[ExtClass]:
        out = []
        for j in range(self.dim):
            e = Matrix(self.dim, 1)
            e[j, 0] = 1
            v = self.quotient.lift(e)
            out.append(ExtClass(self.source, self.target, vec_to_mats(v, self._rows, self._cols)))
        return out

    def element(self, coords: Sequence) -> ExtClass:
        v = self.quotient.lift(la.column(coords))
        return ExtClass(self.source, self.target, vec_to_mats(v, self._rows, self._cols))

    def coords(self, e: ExtClass) -> Matrix:
        return self.quotient.coords(e.vector())

    def coords_vec(self, v: Matrix) -> Matrix:
        return self.quotient.coords(v)

    def __len__(self) -> int:
        return self.dim


def ext1_space(X: Representation, Y: Representation) -> ExtSpace:
    _check_same(X, Y)
    key = ("ext", id(Y))
    hit = X._cache.get(key)
    if hit is not None and hit[0] is Y:
        return hit[1]
    E = ExtSpace(X, Y)
    X._cache[key] = (Y, E)
    return E


def ext1_dim(X: Representation, Y: Representation) -> int:
    D = differential(X, Y)
    return D.nrows() - la.rank(D)


# ---------------------------------------------------------------- standard modules


def projective(Q: Quiver, i: int) -> Representation:
    """P_i with the path basis: P_i(w) has one basis vector per path i -> w."""
    paths = Q.paths_from[i]
    index = {w: {p: k for k, p in enumerate(paths[w])} for w in range(Q.n)}
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        m = Matrix(len(paths[t]), len(paths[s]))
        for k, p in enumerate(paths[s]):
            m[index[t][p + (a,)], k] = 1
        maps.append(m)
    P = Representation(Q, [len(paths[w]) for w in range(Q.n)], maps, name=f"P{i + 1}")
    P._cache["paths"] = paths
    return P


def injective(Q: Quiver, i: int) -> Representation:
    """I_i: I_i(w) is dual to the paths w -> i."""
    into = {w: Q.paths_from[w][i] for w in range(Q.n)}
    index = {w: {p: k for k, p in enumerate(into[w])} for w in range(Q.n)}
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        # dual of q |-> a.q : paths(t -> i) -> paths(s -> i)
        m = Matrix(len(into[t]), len(into[s]))
        for k, q in enumerate(into[t]):
            m[k, index[s][(a,) + q]] = 1
        maps.append(m)
    return Representation(Q, [len(into[w]) for w in range(Q.n)], maps, name=f"I{i + 1}")


def simple(Q: Quiver, i: int) -> Representation:
    dims = [1 if v == i else 0 for v in range(Q.n)]
    maps = [Matrix(dims[t], dims[s]) for s, t in Q.arrows]
    return Representation(Q, dims, maps, name=f"S{i + 1}")


def from_projective(P: Representation, i: int, X: Representation, x: Matrix) -> Morphism:
    """The map P_i -> X sending the trivial path e_i to the column x in X_i."""
    paths = P._cache["paths"]
    mats = []
    for w in range(X.quiver.n):
        m = Matrix(X.dims[w], len(paths[w]))
        for k, p in enumerate(paths[w]):
            col = X.path_map(p) * x if p else x
            for r in range(X.dims[w]):
                if col[r, 0] != 0:
                    m[r, k] = col[r, 0]
        mats.append(m)
    return Morphism(P, X, mats)


def direct_sum(parts: Sequence[Representation], name: str = "") -> Representation:
    if not parts:
        raise QuiverError("empty direct sum")
    Q = parts[0].quiver
    for p in parts:
        _check_same(parts[0], p)
    if len(parts) == 1:
        return parts[0]
    dims = [sum(p.dims[v] for p in parts) for v in range(Q.n)]
    maps = [la.block_diag([p.maps[a] for p in parts]) for a in range(len(Q.arrows))]
    S = Representation(Q, dims, maps, name=name or " + ".join(p.name or "?" for p in parts))
    S._cache["parts"] = list(parts)
    return S


def inclusions(S: Representation) -> list[Morphism]:
    """Canonical inclusions of the parts of a direct sum built by direct_sum."""
    parts = S._cache.get("parts") or [S]
    out, offs = [], [0] * S.quiver.n
    for p in parts:
        mats = []
        for v in range(S.quiver.n):
            m = Matrix(S.dims[v], p.dims[v])
            for k in range(p.dims[v]):
                m[offs[v] + k, k] = 1
            mats.append(m)
        out.append(Morphism(p, S, mats))
        offs = [o + p.dims[v] for v, o in enumerate(offs)]
    return out


def projections(S: Representation) -> list[Morphism]:
    return [Morphism(S, i.source, [m.transpose() for m in i.mats]) for i in inclusions(S)]


def morphism_from_parts(S: Representation, target: Representation, pieces: Sequence[Morphism]) -> Morphism:
    """(f_1, ..., f_k) : P_1 + ... + P_k -> target."""
    mats = [la.hstack([f.mats[v] for f in pieces], nrows=target.dims[v]) for v in range(S.quiver.n)]
    return Morphism(S, target, mats)


# ---------------------------------------------------------------- sub / quotient


def subrepresentation(X: Representation, spans: Sequence[Matrix]) -> tuple[Representation, Morphism]:
    """Subrepresentation with the given per-vertex spanning columns, and its inclusion."""
    Q = X.quiver
    bases = [la.column_basis(s) if s.ncols() else Matrix(X.dims[v], 0) for v, s in enumerate(spans)]
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        img = X.maps[a] * bases[s]
        if bases[s].ncols() == 0:
            maps.append(Matrix(bases[t].ncols(), 0))
            continue
        sol = la.solve(bases[t], img) if bases[t].ncols() else (Matrix(0, img.ncols()) if la.is_zero(img) else None)
        if sol is None:
            raise QuiverError("subspaces are not closed under the arrows")
        maps.append(sol)
    U = Representation(Q, [b.ncols() for b in bases], maps)
    return U, Morphism(U, X, bases)


def quotient_representation(X: Representation, spans: Sequence[Matrix]) -> tuple[Representation, Morphism]:
    """X modulo a subrepresentation, and the canonical projection."""
    Q = X.quiver
    projs, sections = [], []
    for v in range(Q.n):
        s = spans[v]
        if s.ncols() == 0 or la.is_zero(s):
            projs.append(la.identity(X.dims[v]))
            sections.append(la.identity(X.dims[v]))
            continue
        q = la.left_kernel_matrix(s)
        free = la.kernel_free_rows(s.transpose())
        r = Matrix(X.dims[v], len(free))
        for j, f in enumerate(free):
            r[f, j] = 1
        projs.append(q)
        sections.append(r)
    maps = [projs[t] * X.maps[a] * sections[s] for a, (s, t) in enumerate(Q.arrows)]
    Y = Representation(Q, [p.nrows() for p in projs], maps)
    return Y, Morphism(X, Y, projs)


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    return subrepresentation(f.source, [la.kernel_matrix(m) for m in f.mats])


def image_spans(f: Morphism) -> list[Matrix]:
    return [la.column_basis(m) for m in f.mats]


def is_epi(f: Morphism) -> bool:
    return all(la.rank(m) == m.nrows() for m in f.mats)


def is_mono(f: Morphism) -> bool:
    return all(la.rank(m) == m.ncols() for m in f.mats)
