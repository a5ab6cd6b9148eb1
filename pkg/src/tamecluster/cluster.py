"""The cluster category on its fundamental domain ind H + H[1], and B = End(T~).

A morphism X~ -> Y~ is a pair (deg0, deg1) with deg0 in Hom_D(X, Y) and deg1
in Hom_D(X, FY), F = tau^-1[1].  Concretely, by the kinds of X and Y:

    module -> module    deg0 = Hom(X, Y)        deg1 = Ext^1(X, tau^-1 Y)
    module -> P[1]      deg0 = Ext^1(X, P)      deg1 = 0
    P[1]   -> module    deg0 = 0                deg1 = Hom(P, tau^-1 Y)
    P[1]   -> P'[1]     deg0 = Hom(P, P')       deg1 = 0

Composition is (g o f)_0 = g0 f0 and (g o f)_1 = F(g0) f1 + g1 f0; degree-2
terms vanish on the fundamental domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import linalg as la
from .ar import Catalog, Transjective
from .linalg import Matrix
from .quiver import ExtClass, Morphism, Representation, ext1_space, hom_space, projective
from .reflection import coxeter_minus, coxeter_minus_map


class ClusterError(ValueError):
    pass


@dataclass(eq=False)
class ClusterObject:
    """A module X (kind "mod") or a shifted projective P[1] (kind "shift")."""

    kind: str
    rep: Representation
    label: object = None

    def __post_init__(self):
        if self.kind not in ("mod", "shift"):
            raise ClusterError(f"unknown object kind {self.kind!r}")

    @property
    def name(self) -> str:
        if self.label is not None:
            return str(self.label)
        return self.rep.name or repr(self.rep)

    def key(self):
        return (self.kind, self.label) if self.label is not None else (self.kind, id(self.rep))


@dataclass(frozen=True)
class Shift:
    """Symbolic label of P_i[1] (vertex 1-based)."""

    vertex: int

    def __str__(self) -> str:
        return f"P{self.vertex}[1]"

    def sort_key(self):
        return (-1, 0, self.vertex)


class ClusterMorphism:
    __slots__ = ("source", "target", "deg0", "deg1")

    def __init__(self, source: ClusterObject, target: ClusterObject, deg0=None, deg1=None):
        self.source, self.target = source, target
        self.deg0, self.deg1 = deg0, deg1


class ClusterHomSpace:
    def __init__(self, X: ClusterObject, Y: ClusterObject):
        self.source, self.target = X, Y
        kinds = (X.kind, Y.kind)
        self.kinds = kinds
        self.space0 = self.space1 = None
        if kinds == ("mod", "mod"):
            self.space0 = hom_space(X.rep, Y.rep)
            self.space1 = ext1_space(X.rep, coxeter_minus(Y.rep))
        elif kinds == ("mod", "shift"):
            self.space0 = ext1_space(X.rep, Y.rep)
        elif kinds == ("shift", "mod"):
            self.space1 = hom_space(X.rep, coxeter_minus(Y.rep))
        else:
            self.space0 = hom_space(X.rep, Y.rep)
        self.dim0 = self.space0.dim if self.space0 is not None else 0
        self.dim1 = self.space1.dim if self.space1 is not None else 0
        self.dim = self.dim0 + self.dim1

    @cached_property
    def basis(self) -> list[ClusterMorphism]:
        out = [ClusterMorphism(self.source, self.target, deg0=b) for b in (self.space0.basis if self.space0 else [])]
        out += [ClusterMorphism(self.source, self.target, deg1=b) for b in (self.space1.basis if self.space1 else [])]
        return out

    def element(self, coords) -> ClusterMorphism:
        coords = list(coords)
        d0 = self.space0.element(coords[: self.dim0]) if self.dim0 else None
        d1 = self.space1.element(coords[self.dim0:]) if self.dim1 else None
        return ClusterMorphism(self.source, self.target, d0, d1)

    def coords(self, m: ClusterMorphism) -> Matrix:
        out = Matrix(self.dim, 1)
        if self.dim0 and m.deg0 is not None:
            c = self.space0.coords(m.deg0)
            for i in range(self.dim0):
                out[i, 0] = c[i, 0]
        if self.dim1 and m.deg1 is not None:
            c = self.space1.coords(m.deg1)
            for i in range(self.dim1):
                out[self.dim0 + i, 0] = c[i, 0]
        return out


def _add(a, b):
    if a is None:
        return b
    if b is None:
        return a
    if isinstance(a, ExtClass):
        return ExtClass(a.source, a.target, [x + y for x, y in zip(a.cocycle, b.cocycle)])
    return a + b


def cluster_compose(g: ClusterMorphism, f: ClusterMorphism) -> ClusterMorphism:
    """g o f."""
    if f.target is not g.source and f.target.key() != g.source.key():
        raise ClusterError("object mismatch in composition")
    X, Y, Z = f.source, f.target, g.target
    kinds = (X.kind, Y.kind, Z.kind)
    d0 = d1 = None
    f0, f1, g0, g1 = f.deg0, f.deg1, g.deg0, g.deg1
    if kinds == ("mod", "mod", "mod"):
        if f0 is not None and g0 is not None:
            d0 = g0.compose(f0)
        if f1 is not None and g0 is not None:
            d1 = f1.pushforward(coxeter_minus_map(g0))
        if g1 is not None and f0 is not None:
            d1 = _add(d1, g1.pullback(f0))
    elif kinds == ("mod", "mod", "shift"):
        if g0 is not None and f0 is not None:
            d0 = g0.pullback(f0)
    elif kinds == ("mod", "shift", "shift"):
        if f0 is not None and g0 is not None:
            d0 = f0.pushforward(g0)
    elif kinds == ("mod", "shift", "mod"):
        if f0 is not None and g1 is not None:
            d1 = f0.pushforward(g1)
    elif kinds == ("shift", "mod", "mod"):
        if f1 is not None and g0 is not None:
            d1 = coxeter_minus_map(g0).compose(f1)
    elif kinds == ("shift", "mod", "shift"):
        pass
    elif kinds == ("shift", "shift", "mod"):
        if f0 is not None and g1 is not None:
            d1 = g1.compose(f0)
    else:
        if f0 is not None and g0 is not None:
            d0 = g0.compose(f0)
    return ClusterMorphism(X, Z, d0, d1)


# ---------------------------------------------------------------- the category


class ClusterCategory:
    """Objects and Hom spaces of the cluster category of one catalog."""

    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self._objects: dict = {}
        self._homs: dict = {}

    def obj(self, label) -> ClusterObject:
        hit = self._objects.get(label)
        if hit is not None:
            return hit
        if isinstance(label, Shift):
            P = projective(self.catalog.Q, label.vertex - 1)
            o = ClusterObject("shift", P, label)
        else:
            o = ClusterObject("mod", self.catalog.realize(label), label)
        self._objects[label] = o
        return o

    def module(self, X: Representation, name: str = "") -> ClusterObject:
        if name:
            X.name = name
        return ClusterObject("mod", X)

    def hom(self, X: ClusterObject, Y: ClusterObject) -> ClusterHomSpace:
        key = (X.key(), Y.key())
        hit = self._homs.get(key)
        if hit is not None and hit.source is X and hit.target is Y:
            return hit
        H = ClusterHomSpace(X, Y)
        self._homs[key] = H
        return H

    def tau_label(self, label):
        """Label of tau_C of an object label (None if outside the catalog)."""
        if isinstance(label, Shift):
            return Transjective("preinjective", label.vertex, 0)
        if isinstance(label, Transjective) and label.side == "preprojective" and label.power == 0:
            return Shift(label.vertex)
        return self.catalog.tau_label(label)

    def tau_inv_label(self, label):
        if isinstance(label, Shift):
            return Transjective("preprojective", label.vertex, 0)
        if isinstance(label, Transjective) and label.side == "preinjective" and label.power == 0:
            return Shift(label.vertex)
        return self.catalog.tau_inv_label(label)


def cluster_hom(C: ClusterCategory, X: ClusterObject, Y: ClusterObject) -> ClusterHomSpace:
    return C.hom(X, Y)


# ---------------------------------------------------------------- Hom_B


class BHomSpace:
    """Hom_C(X~, Y~) modulo the maps factoring through add(tau T~)."""

    def __init__(self, C: ClusterCategory, X: ClusterObject, Y: ClusterObject, through: list[ClusterObject]):
        self.ambient = C.hom(X, Y)
        vecs = []
        if self.ambient.dim:
            for W in through:
                A = C.hom(X, W)
                if not A.dim:
                    continue
                B = C.hom(W, Y)
                if not B.dim:
                    continue
                for v in B.basis:
                    for u in A.basis:
                        vecs.append(self.ambient.coords(cluster_compose(v, u)))
        sub = la.hstack(vecs, nrows=self.ambient.dim) if vecs else Matrix(self.ambient.dim, 0)
        self.factoring = la.column_basis(sub) if vecs else sub
        self.quotient = la.QuotientSpace(self.ambient.dim, self.factoring)
        self.dim = self.quotient.dim

    @property
    def factoring_dim(self) -> int:
        return self.factoring.ncols()

    def coords(self, m: ClusterMorphism) -> Matrix:
        return self.quotient.coords(self.ambient.coords(m))

    def coords_vec(self, v: Matrix) -> Matrix:
        return self.quotient.coords(v)

    def lift(self, c) -> ClusterMorphism:
        v = self.quotient.lift(c if isinstance(c, Matrix) else la.column(c))
        return self.ambient.element([v[i, 0] for i in range(v.nrows())])

    @cached_property
    def basis(self) -> list[ClusterMorphism]:
        out = []
        for j in range(self.dim):
            e = Matrix(self.dim, 1)
            e[j, 0] = 1
            out.append(self.lift(e))
        return out


@dataclass
class BAlgebra:
    """B = End_C(T~): Hom spaces between summands, radical data and the Gabriel quiver."""

    labels: list
    homs: dict            # (i, j) -> ClusterHomSpace T_i -> T_j
    rad_dims: dict        # (i, j) -> dim rad
    rad2_dims: dict       # (i, j) -> dim rad^2
    arrows: dict          # (i, j) -> multiplicity of arrows i -> j

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dimension(self) -> int:
        return sum(h.dim for h in self.homs.values())

    def arrow_list(self) -> list[tuple[int, int]]:
        out = []
        for (i, j), m in sorted(self.arrows.items()):
            out.extend([(i, j)] * m)
        return out


def scalar_part(m: ClusterMorphism) -> object:
    """tr of the degree-0 component divided by the dimension (End/rad = Q)."""
    d0 = m.deg0
    if d0 is None or not isinstance(d0, Morphism):
        return 0
    tr = sum((la.trace(mat) for mat in d0.mats), la.Scalar(0))
    dim = sum(d0.source.dims)
    return tr / dim if dim else 0


def radical_basis(space: ClusterHomSpace, same: bool) -> Matrix:
    """Columns spanning the radical of Hom_C(X, Y) (everything unless X = Y)."""
    if not same:
        return la.identity(space.dim)
    row = Matrix(1, space.dim)
    for j, b in enumerate(space.basis):
        row[0, j] = scalar_part(b)
    return la.kernel_matrix(row)


def b_algebra(C: ClusterCategory, labels: list, arrow_convention: str = "source") -> BAlgebra:
    """End_C of the given summands.

    With ``arrow_convention="source"`` an irreducible map T_i -> T_j gives an
    arrow j -> i (arrows follow the maps between indecomposable projective
    B-modules Hom(T~, T~_i) in the opposite direction); ``"map"`` keeps the
    direction of the maps.
    """
    objs = [C.obj(l) for l in labels]
    n = len(objs)
    homs = {(i, j): C.hom(objs[i], objs[j]) for i in range(n) for j in range(n)}
    rad = {}
    for (i, j), H in homs.items():
        rad[(i, j)] = radical_basis(H, i == j)
    rad_elems = {}
    for key, R in rad.items():
        H = homs[key]
        rad_elems[key] = [H.element([R[r, c] for r in range(R.nrows())]) for c in range(R.ncols())]
    rad_dims = {k: R.ncols() for k, R in rad.items()}
    rad2_dims, arrows = {}, {}
    for i in range(n):
        for j in range(n):
            H = homs[(i, j)]
            vecs = []
            for k in range(n):
                for u in rad_elems[(i, k)]:
                    for v in rad_elems[(k, j)]:
                        vecs.append(H.coords(cluster_compose(v, u)))
            r2 = la.rank(la.hstack(vecs, nrows=H.dim)) if vecs and H.dim else 0
            rad2_dims[(i, j)] = r2
            m = rad_dims[(i, j)] - r2
            if m:
                key = (j, i) if arrow_convention == "source" else (i, j)
                arrows[key] = m
    return BAlgebra(list(labels), homs, rad_dims, rad2_dims, arrows)


# ---------------------------------------------------------------- the BMR functor


@dataclass
class BModule:
    """Descriptor of X' = Hom_C(T~, X~): its dimension vector over the vertices of B."""

    source: object
    dims: tuple[int, ...]
    projective: bool
    injective: bool


class BMRContext:
    """Everything needed to work in mod B through C/add(tau T~)."""

    def __init__(self, C: ClusterCategory, T_labels: list):
        self.C = C
        self.T_labels = list(T_labels)
        self.T_objs = [C.obj(l) for l in T_labels]
        self.tauT_labels = [C.tau_label(l) for l in T_labels]
        self.tauT_objs = [C.obj(l) for l in self.tauT_labels]
        self._bhom: dict = {}

    def b_hom(self, X: ClusterObject, Y: ClusterObject) -> BHomSpace:
        key = (X.key(), Y.key())
        hit = self._bhom.get(key)
        if hit is not None and hit.ambient.source is X and hit.ambient.target is Y:
            return hit
        H = BHomSpace(self.C, X, Y, self.tauT_objs)
        self._bhom[key] = H
        return H

    def in_tau_T(self, label) -> bool:
        return label in self.tauT_labels

    def b_dims(self, X: ClusterObject) -> tuple[int, ...]:
        return tuple(self.b_hom(Ti, X).dim for Ti in self.T_objs)

    def bmr_image(self, label) -> BModule:
        if self.in_tau_T(label):
            raise ClusterError(f"{label} collapses to zero (it lies in add(tau T))")
        X = self.C.obj(label)
        dims = self.b_dims(X)
        if not any(dims):
            raise ClusterError(f"{label} collapses to zero")
        return BModule(label, dims, label in self.T_labels, self.is_b_injective(label))

    def tau2T_labels(self) -> list:
        out = []
        for l in self.tauT_labels:
            out.append(self.C.tau_label(l))
        return out

    def is_b_injective(self, label) -> bool:
        return label in self.tau2T_labels()


def bmr_image(ctx: BMRContext, label) -> BModule:
    return ctx.bmr_image(label)


def b_hom(ctx: BMRContext, X: ClusterObject, Y: ClusterObject) -> BHomSpace:
    return ctx.b_hom(X, Y)
