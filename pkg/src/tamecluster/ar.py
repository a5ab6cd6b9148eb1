"""Auslander-Reiten structure of a tame hereditary algebra.

Indecomposables are addressed by symbolic labels (``Transjective``,
``Regular``, ``Homogeneous``) and realized on demand by a ``Catalog``.
Transjective modules come from iterating the Coxeter functors on
projectives and injectives.  Exceptional tubes are found from the Coxeter
matrix alone: a mouth is a Phi-orbit of positive real roots of defect zero
whose members sum to the null root.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .linalg import Matrix
from .quiver import (
    Quiver,
    QuiverError,
    Representation,
    ext1_space,
    hom_dim,
    hom_space,
    injective,
    projective,
)
from .reflection import coxeter_minus, coxeter_plus


class CatalogError(ValueError):
    pass


# ---------------------------------------------------------------- Coxeter data


def cartan_matrix(Q: Quiver) -> list[list[int]]:
    """Column i is dim P_i."""
    c = Q.cartan()
    return [[c[i][w] for i in range(Q.n)] for w in range(Q.n)]


def coxeter_matrix(Q: Quiver) -> list[list[int]]:
    """Phi with dim tau X = Phi . dim X for X without projective summands."""
    C = la.matrix(cartan_matrix(Q))
    phi = -(C.transpose() * C.inv())
    return [[int(phi[i, j].p) for j in range(Q.n)] for i in range(Q.n)]


def apply(m: Sequence[Sequence[int]], x: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(r[j] * x[j] for j in range(len(x))) for r in m)


def _int_inverse(m: list[list[int]]) -> list[list[int]]:
    inv = la.matrix(m).inv()
    out = [[inv[i, j] for j in range(len(m))] for i in range(len(m))]
    if any(x.q != 1 for row in out for x in row):
        raise QuiverError("Coxeter matrix is not unimodular")
    return [[int(x.p) for x in row] for row in out]


def null_root(Q: Quiver) -> tuple[int, ...]:
    """Positive generator of the radical of the symmetric Euler form."""
    n = Q.n
    sym = la.matrix([[Q.symmetric_form(_unit(n, i), _unit(n, j)) for j in range(n)] for i in range(n)])
    K = la.kernel_matrix(sym)
    if K.ncols() != 1:
        raise QuiverError("quiver is not of Euclidean type (radical is not one-dimensional)")
    v = [Fraction(int(K[i, 0].p), int(K[i, 0].q)) for i in range(n)]
    den = 1
    for x in v:
        den = den * x.denominator // _gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = 0
    for x in w:
        g = _gcd(g, abs(x))
    w = [x // g for x in w]
    if all(x <= 0 for x in w):
        w = [-x for x in w]
    if not all(x > 0 for x in w):
        raise QuiverError("quiver is not of Euclidean type (null root not sincere)")
    return tuple(w)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class CoxeterData:
    phi: tuple[tuple[int, ...], ...]
    phi_inv: tuple[tuple[int, ...], ...]
    delta: tuple[int, ...]
    period: int
    defect_form: tuple[int, ...]

    def tau(self, x: Sequence[int]) -> tuple[int, ...]:
        return apply(self.phi, x)

    def tau_inv(self, x: Sequence[int]) -> tuple[int, ...]:
        return apply(self.phi_inv, x)

    def defect(self, x: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.defect_form, x))


@functools.lru_cache(maxsize=None)
def coxeter_data(Q: Quiver, max_period: int = 500) -> CoxeterData:
    phi = coxeter_matrix(Q)
    delta = null_root(Q)
    n = Q.n
    P = la.matrix(phi)
    I = la.identity(n)
    power = P
    for h in range(1, max_period + 1):
        diff = power - I
        if la.rank(diff) == 1:
            # diff = delta . r for a row r
            k = next(i for i in range(n) if delta[i] != 0)
            row = [diff[k, j] / delta[k] for j in range(n)]
            ok = all(diff[i, j] == delta[i] * row[j] for i in range(n) for j in range(n))
            if ok and all(x.q == 1 for x in row):
                form = tuple(int(x.p) for x in row)
                # defect is negative on projectives
                p1 = [len(Q.paths_from[0][w]) for w in range(n)]
                if sum(a * b for a, b in zip(form, p1)) >= 0:
                    raise QuiverError("defect sign convention failed")
                rows = tuple(tuple(r) for r in phi)
                return CoxeterData(rows, tuple(tuple(r) for r in _int_inverse(phi)), delta, h, form)
        power = power * P
    raise QuiverError("no Coxeter period found")


def defect(Q: Quiver, x: Sequence[int]) -> int:
    return coxeter_data(Q).defect(x)


def is_real_root(Q: Quiver, x: Sequence[int]) -> bool:
    return Q.euler_form(x, x) == 1


# ---------------------------------------------------------------- labels


@dataclass(frozen=True)
class Transjective:
    side: str          # "preprojective" | "preinjective"
    vertex: int        # 1-based
    power: int

    def __str__(self) -> str:
        if self.side == "preprojective":
            return f"P{self.vertex}" if self.power == 0 else f"t^-{self.power}P{self.vertex}"
        return f"I{self.vertex}" if self.power == 0 else f"t^{self.power}I{self.vertex}"

    def sort_key(self):
        return (0 if self.side == "preprojective" else 2, self.power if self.side == "preprojective" else -self.power, self.vertex)


@dataclass(frozen=True)
class Regular:
    tube: str
    ray: int           # 1..rank
    level: int

    def __str__(self) -> str:
        return f"{self.tube}:E{self.ray}^{self.level}"

    def sort_key(self):
        return (1, self.tube, self.level, self.ray)


@dataclass(frozen=True)
class Homogeneous:
    param: Fraction | None   # None is the point at infinity
    level: int

    def __str__(self) -> str:
        p = "inf" if self.param is None else str(self.param)
        return f"H[{p}]^{self.level}"

    def sort_key(self):
        return (1, "~", self.level, (1, 0) if self.param is None else (0, self.param))


IndecLabel = Transjective | Regular | Homogeneous


def is_regular(label) -> bool:
    return isinstance(label, (Regular, Homogeneous))


def sort_labels(labels: Iterable) -> list:
    return sorted(labels, key=lambda l: l.sort_key())


# ---------------------------------------------------------------- tubes


@dataclass
class Tube:
    tube_id: str
    rank: int
    mouth_dims: list[tuple[int, ...]]      # dim E_1, ..., dim E_r
    homogeneous: bool = False
    params: list = field(default_factory=list)

    def ray_dims(self, ray: int, level: int) -> tuple[int, ...]:
        r = self.rank
        n = len(self.mouth_dims[0])
        out = [0] * n
        for i in range(level):
            d = self.mouth_dims[(ray - 1 + i) % r]
            out = [a + b for a, b in zip(out, d)]
        return tuple(out)


def mouth_orbits(Q: Quiver, cox: CoxeterData | None = None) -> list[list[tuple[int, ...]]]:
    """Phi-orbits of positive real roots x < delta of defect 0 summing to delta."""
    cox = cox or coxeter_data(Q)
    delta = np.array(cox.delta, dtype=np.int64)
    n = Q.n
    grids = np.meshgrid(*[np.arange(d + 1, dtype=np.int64) for d in delta], indexing="ij")
    X = np.stack([g.ravel() for g in grids], axis=1)
    X = X[(X.sum(axis=1) > 0) & (X != delta).any(axis=1)]
    form = np.array(cox.defect_form, dtype=np.int64)
    X = X[X @ form == 0]
    # real roots: <x,x> = 1
    q = (X * X).sum(axis=1)
    for s, t in Q.arrows:
        q = q - X[:, s] * X[:, t]
    X = X[q == 1]
    candidates = {tuple(int(v) for v in row) for row in X}
    orbits, seen = [], set()
    for x in sorted(candidates):
        if x in seen:
            continue
        orbit, y = [x], tuple(int(v) for v in phi_inv_apply(cox, x))
        # walk forwards with tau^-1 so that E_{j+1} = tau^-1 E_j
        while y != x and len(orbit) <= n + 2:
            orbit.append(y)
            y = tuple(int(v) for v in phi_inv_apply(cox, y))
        if y != x or any(min(o) < 0 for o in orbit):
            continue
        total = tuple(sum(o[i] for o in orbit) for i in range(n))
        if total != cox.delta or len(orbit) < 2:
            continue
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def phi_inv_apply(cox: CoxeterData, x: Sequence[int]) -> tuple[int, ...]:
    return cox.tau_inv(x)


def enumerate_tubes(Q: Quiver, anchors: dict[str, Sequence[int]] | None = None) -> list[Tube]:
    """Exceptional tubes (rank >= 2) followed by the homogeneous family.

    ``anchors`` maps a tube name to the dimension vector of its E_1; other
    tubes are named T1, T2, ... and anchored at their smallest mouth module
    (ties: lexicographically largest dimension vector).
    """
    cox = coxeter_data(Q)
    orbits = mouth_orbits(Q, cox)
    anchors = dict(anchors or {})
    tubes, used = [], set()
    for name, dims in anchors.items():
        dims = tuple(int(d) for d in dims)
        hit = [o for o in orbits if dims in o]
        if not hit:
            raise CatalogError(f"tube anchor {list(dims)} is not a mouth module of an exceptional tube")
        o = hit[0]
        k = o.index(dims)
        tubes.append(Tube(name, len(o), o[k:] + o[:k]))
        used.add(id(o))
    rest = [o for o in orbits if id(o) not in used]
    rest.sort(key=lambda o: (-len(o), sorted(o)))
    counter = 1
    names = {t.tube_id for t in tubes}
    for o in rest:
        start = min(range(len(o)), key=lambda i: (sum(o[i]), tuple(-v for v in o[i])))
        while f"T{counter}" in names:
            counter += 1
        tubes.append(Tube(f"T{counter}", len(o), o[start:] + o[:start]))
        names.add(f"T{counter}")
    tubes.append(Tube("H", 1, [cox.delta], homogeneous=True))
    return tubes


# ---------------------------------------------------------------- cones


@dataclass(frozen=True)
class Cone:
    vertex: Regular
    rank: int
    members: tuple[Regular, ...]

    @property
    def level(self) -> int:
        return self.vertex.level


def cone(vertex, rank: int) -> Cone:
    """All E_b^l whose regular composition factors lie among those of the vertex."""
    if not isinstance(vertex, Regular):
        raise CatalogError(f"cone needs a regular label in an exceptional tube, got {vertex}")
    a, m = vertex.ray, vertex.level
    members = []
    for d in range(m):
        for l in range(1, m - d + 1):
            members.append(Regular(vertex.tube, (a - 1 + d) % rank + 1, l))
    return Cone(vertex, rank, tuple(sort_labels(members)))


def cone_edge(vertex, rank: int) -> list[Regular]:
    """The coray segment through the vertex inside its cone."""
    if not isinstance(vertex, Regular):
        raise CatalogError(f"cone needs a regular label in an exceptional tube, got {vertex}")
    a, m = vertex.ray, vertex.level
    return [Regular(vertex.tube, (a - 1 + i) % rank + 1, m - i) for i in range(m)]


def in_cone(label, c: Cone) -> bool:
    if not isinstance(label, Regular) or label.tube != c.vertex.tube:
        return False
    d = (label.ray - c.vertex.ray) % c.rank
    return d + label.level <= c.vertex.level


# ---------------------------------------------------------------- slices


@dataclass(frozen=True)
class Slice:
    power: int
    members: tuple[Transjective, ...]


def slice_modules(Q: Quiver, k: int) -> Slice:
    if k < 0:
        raise CatalogError("slice power must be non-negative")
    return Slice(k, tuple(Transjective("preinjective", i + 1, k) for i in range(Q.n)))


# ---------------------------------------------------------------- pairing helpers


def trace_pairing(first: Sequence, second: Sequence) -> Matrix:
    """Matrix of tr(v o u) for u in ``first`` (X -> Z) and v in ``second`` (Z -> X).

    Rows are indexed by ``second``, columns by ``first``.
    """
    out = Matrix(len(second), len(first))
    if not first or not second:
        return out
    n = len(first[0].mats)
    U = [_flat([u.mats[w] for w in range(n)]) for u in first]
    V = [_flat([v.mats[w].transpose() for w in range(n)]) for v in second]
    Um = Matrix(len(U[0]), len(U), [x for row in zip(*U) for x in row]) if U[0] else None
    if Um is None:
        return out
    Vm = Matrix(len(V), len(V[0]), [x for row in V for x in row])
    return Vm * Um


def _flat(mats) -> list:
    out = []
    for m in mats:
        out.extend(m.entries())
    return out


def local_rank(X: Representation) -> int:
    """dim End(X)/rad End(X); X is indecomposable iff this is 1."""
    H = hom_space(X, X)
    if H.dim == 0:
        return 0
    return la.rank(trace_pairing(H.basis, H.basis))


def is_indecomposable(X: Representation) -> bool:
    return X.dim > 0 and local_rank(X) == 1


def multiplicity(Z: Representation, X: Representation) -> int:
    """Multiplicity of the indecomposable Z as a summand of X."""
    if any(z > x for z, x in zip(Z.dims, X.dims)):
        return 0
    A = hom_space(Z, X)
    if A.dim == 0:
        return 0
    B = hom_space(X, Z)
    if B.dim == 0:
        return 0
    return la.rank(trace_pairing(A.basis, B.basis))


def is_isomorphic(X: Representation, Y: Representation) -> bool:
    """Isomorphism test for an indecomposable X against any Y."""
    if X.dims != Y.dims:
        return False
    return multiplicity(X, Y) == 1


# ---------------------------------------------------------------- catalog


@dataclass
class Window:
    power: int | None = None     # transjective powers 0..power
    levels: int | None = None    # tube levels 1..levels (default rank + 2)
    homogeneous: int = 2         # number of homogeneous parameters sampled
    homogeneous_levels: int | None = None   # default: levels, else rank + 2 = 3


class Catalog:
    """Realizations of indecomposables for one quiver, with caching."""

    def __init__(self, Q: Quiver, anchors: dict | None = None, window: Window | None = None, seed: int = 0):
        self.Q = Q
        self.cox = coxeter_data(Q)
        self.tubes = enumerate_tubes(Q, anchors)
        self.tube_by_id = {t.tube_id: t for t in self.tubes}
        self.window = window or Window()
        if self.window.power is None:
            self.window.power = self.sincerity_threshold() + Q.n
        self.seed = seed
        self._reps: dict = {}
        self._proj = [projective(Q, i) for i in range(Q.n)]
        self._inj = [injective(Q, i) for i in range(Q.n)]
        self._homog_base = None
        self._homog_params: list | None = None

    # -- Coxeter bookkeeping

    def sincerity_threshold(self) -> int:
        """Least m with Phi^m dim I_i sincere for every i."""
        dims = [self._inj_dims(i) for i in range(self.Q.n)]
        m = 0
        while not all(min(d) > 0 for d in dims):
            dims = [self.cox.tau(d) for d in dims]
            m += 1
            if m > 10 * self.Q.n + 50:
                raise CatalogError("sincerity threshold not reached")
        return m

    def _inj_dims(self, i: int) -> tuple[int, ...]:
        return tuple(len(self.Q.paths_from[w][i]) for w in range(self.Q.n))

    def levels_for(self, tube: Tube) -> int:
        return self.window.levels if self.window.levels is not None else tube.rank + 2

    # -- labels

    def exceptional_tubes(self) -> list[Tube]:
        return [t for t in self.tubes if not t.homogeneous]

    def dims(self, label) -> tuple[int, ...]:
        if isinstance(label, Transjective):
            i = label.vertex - 1
            if label.side == "preprojective":
                d = tuple(len(self.Q.paths_from[i][w]) for w in range(self.Q.n))
                for _ in range(label.power):
                    d = self.cox.tau_inv(d)
            else:
                d = self._inj_dims(i)
                for _ in range(label.power):
                    d = self.cox.tau(d)
            return d
        if isinstance(label, Regular):
            return self.tube(label.tube).ray_dims(label.ray, label.level)
        if isinstance(label, Homogeneous):
            return tuple(label.level * x for x in self.cox.delta)
        raise CatalogError(f"unknown label {label!r}")

    def tube(self, tube_id: str) -> Tube:
        try:
            return self.tube_by_id[tube_id]
        except KeyError:
            raise CatalogError(f"unknown tube {tube_id!r}") from None

    def tau_label(self, label):
        """Label of tau X, or None when X is projective."""
        if isinstance(label, Transjective):
            if label.side == "preprojective":
                return None if label.power == 0 else Transjective("preprojective", label.vertex, label.power - 1)
            return Transjective("preinjective", label.vertex, label.power + 1)
        if isinstance(label, Regular):
            r = self.tube(label.tube).rank
            return Regular(label.tube, (label.ray - 2) % r + 1, label.level)
        return label

    def tau_inv_label(self, label):
        if isinstance(label, Transjective):
            if label.side == "preinjective":
                return None if label.power == 0 else Transjective("preinjective", label.vertex, label.power - 1)
            return Transjective("preprojective", label.vertex, label.power + 1)
        if isinstance(label, Regular):
            r = self.tube(label.tube).rank
            return Regular(label.tube, label.ray % r + 1, label.level)
        return label

    def in_window(self, label) -> bool:
        if isinstance(label, Transjective):
            return 0 <= label.power <= self.window.power
        if isinstance(label, Regular):
            t = self.tube(label.tube)
            return 1 <= label.ray <= t.rank and 1 <= label.level <= self.levels_for(t)
        if isinstance(label, Homogeneous):
            return 1 <= label.level <= self.homogeneous_levels()
        return False

    def labels(self, homogeneous: bool = True) -> list:
        out = []
        K = self.window.power
        for k in range(K + 1):
            for i in range(self.Q.n):
                out.append(Transjective("preprojective", i + 1, k))
                out.append(Transjective("preinjective", i + 1, k))
        for t in self.exceptional_tubes():
            for l in range(1, self.levels_for(t) + 1):
                for j in range(1, t.rank + 1):
                    out.append(Regular(t.tube_id, j, l))
        if homogeneous:
            for p in self.homogeneous_params()[: self.window.homogeneous]:
                for l in range(1, self.homogeneous_levels() + 1):
                    out.append(Homogeneous(p, l))
        return sort_labels(out)

    def transjective_labels(self, side: str, max_power: int | None = None) -> list[Transjective]:
        K = self.window.power if max_power is None else max_power
        return [Transjective(side, i + 1, k) for k in range(K + 1) for i in range(self.Q.n)]

    def regular_labels(self) -> list[Regular]:
        return [l for l in self.labels(homogeneous=False) if isinstance(l, Regular)]

    # -- realization

    def realize(self, label) -> Representation:
        hit = self._reps.get(label)
        if hit is not None:
            return hit
        if not self.in_window(label):
            raise CatalogError(f"label {label} is outside the catalog window")
        X = self._build(label)
        X.name = str(label)
        self._reps[label] = X
        return X

    def _build(self, label) -> Representation:
        if isinstance(label, Transjective):
            i = label.vertex - 1
            if not 1 <= label.vertex <= self.Q.n:
                raise CatalogError(f"vertex {label.vertex} out of range")
            if label.power == 0:
                return self._proj[i] if label.side == "preprojective" else self._inj[i]
            prev = self.realize(Transjective(label.side, label.vertex, label.power - 1))
            X = coxeter_minus(prev) if label.side == "preprojective" else coxeter_plus(prev)
            return _copy(X)
        if isinstance(label, Regular):
            t = self.tube(label.tube)
            if label.level == 1:
                if label.ray == 1:
                    return self._mouth_anchor(t)
                prev = self.realize(Regular(t.tube_id, label.ray - 1, 1))
                return _copy(coxeter_minus(prev))
            return self._extend(self.realize(Regular(t.tube_id, label.ray, label.level - 1)),
                                self.realize(Regular(t.tube_id, (label.ray - 1 + label.level - 1) % t.rank + 1, 1)))
        if isinstance(label, Homogeneous):
            if label.level == 1:
                return self._homogeneous_simple(label.param)
            return self._extend(self.realize(Homogeneous(label.param, label.level - 1)),
                                self.realize(Homogeneous(label.param, 1)))
        raise CatalogError(f"unknown label {label!r}")

    def _extend(self, sub: Representation, top: Representation) -> Representation:
        """Middle term of the non-split extension 0 -> sub -> E -> top -> 0."""
        E = ext1_space(top, sub)
        if E.dim != 1:
            raise CatalogError(f"expected a one-dimensional Ext^1 along the ray, got {E.dim}")
        return E.basis[0].middle_term()

    def _mouth_anchor(self, t: Tube) -> Representation:
        dims = t.mouth_dims[0]
        rng = random.Random(f"{self.seed}:{t.tube_id}:{dims}")
        for _ in range(200):
            X = _random_rep(self.Q, dims, rng)
            if hom_dim(X, X) == 1:
                return X
        raise CatalogError(f"could not realize the mouth of tube {t.tube_id}")

    # -- homogeneous family

    def homogeneous_levels(self) -> int:
        w = self.window
        if w.homogeneous_levels is not None:
            return w.homogeneous_levels
        return w.levels if w.levels is not None else 3

    def homogeneous_params(self) -> list:
        if self._homog_params is None:
            self._homog_params = self._find_homogeneous_params()
        return self._homog_params

    def _kronecker(self) -> bool:
        return self.Q.n == 2 and len(self.Q.arrows) == 2

    def _find_homogeneous_params(self) -> list:
        if self._kronecker():
            out = [Fraction(0), Fraction(1), None]
            k = 1
            while len(out) < max(self.window.homogeneous, 5):
                out += [Fraction(-k), Fraction(k + 1)]
                k += 1
            return out
        out = []
        for k in range(12):
            p = Fraction(k)
            try:
                self._homogeneous_simple(p)
            except CatalogError:
                continue
            out.append(p)
            if len(out) >= max(self.window.homogeneous, 2):
                break
        return out

    def _homogeneous_simple(self, param) -> Representation:
        key = ("hsimple", param)
        hit = self._reps.get(key)
        if hit is not None:
            return hit
        Q = self.Q
        if self._kronecker():
            s, t = Q.arrows[0]
            a, b = (1, param) if param is not None else (0, 1)
            maps = [la.matrix([[a]]), la.matrix([[b]])]
            X = Representation(Q, (1, 1), maps)
        else:
            if param is None:
                raise CatalogError("the point at infinity is only catalogued for the Kronecker quiver")
            if self._homog_base is None:
                rng = random.Random(f"{self.seed}:homogeneous")
                A0 = _random_rep(Q, self.cox.delta, rng)
                A1 = _random_rep(Q, self.cox.delta, rng)
                self._homog_base = (A0, A1)
            A0, A1 = self._homog_base
            q = la.Scalar(param.numerator, param.denominator)
            X = Representation(Q, self.cox.delta, [m0 + m1 * q for m0, m1 in zip(A0.maps, A1.maps)])
            if not self._is_homogeneous_simple(X):
                raise CatalogError(f"parameter {param} does not give a homogeneous regular simple")
        self._reps[key] = X
        return X

    def _is_homogeneous_simple(self, X: Representation) -> bool:
        if hom_dim(X, X) != 1:
            return False
        tX = coxeter_plus(X)
        if tX.dims != X.dims or not is_isomorphic(X, tX):
            return False
        for t in self.exceptional_tubes():
            for j in range(1, t.rank + 1):
                E = self.realize(Regular(t.tube_id, j, 1))
                if hom_dim(E, X) or hom_dim(X, E):
                    return False
        return True

    # -- identification

    def identify(self, X: Representation, candidates: Iterable | None = None):
        """Catalog label of the indecomposable X (or None)."""
        cands = self.labels() if candidates is None else candidates
        for l in cands:
            if self.dims(l) != X.dims:
                continue
            if is_isomorphic(self.realize(l), X):
                return l
        return None

    def decompose(self, X: Representation, candidates: Iterable | None = None) -> list[tuple]:
        """Indecomposable summands of X as (label, multiplicity), sorted by label."""
        cands = self.labels() if candidates is None else list(candidates)
        remaining = list(X.dims)
        out = []
        for l in cands:
            d = self.dims(l)
            if any(a > b for a, b in zip(d, remaining)) or sum(d) == 0:
                continue
            m = multiplicity(self.realize(l), X)
            if m:
                out.append((l, m))
                remaining = [r - m * a for r, a in zip(remaining, d)]
            if not any(remaining):
                break
        if any(remaining):
            raise CatalogError(f"unidentified summand of dimension {remaining}")
        return out

    def label_for_simple(self, i: int):
        """Label of the simple module at (0-based) vertex i."""
        d = _unit(self.Q.n, i)
        if self.cox.defect(d) == 0:
            cands = [l for l in self.regular_labels() if l.level == 1]
        else:
            cands = None
        from .quiver import simple
        lab = self.identify(simple(self.Q, i), cands)
        if lab is None:
            raise CatalogError(f"simple S{i + 1} not found in the catalog window")
        return lab


def _copy(X: Representation) -> Representation:
    return Representation(X.quiver, X.dims, X.maps)


def _random_rep(Q: Quiver, dims: Sequence[int], rng: random.Random) -> Representation:
    maps = []
    for s, t in Q.arrows:
        maps.append(la.matrix([[rng.randint(-3, 3) for _ in range(dims[s])] for _ in range(dims[t])], dims[t], dims[s]))
    return Representation(Q, dims, maps)


def tau(X: Representation) -> Representation:
    """AR translate of X; X must not have projective summands."""
    Y = coxeter_plus(X)
    cox = coxeter_data(X.quiver)
    if Y.dims != cox.tau(X.dims):
        raise CatalogError("projective summand present")
    return Y


def tau_inverse(X: Representation) -> Representation:
    Y = coxeter_minus(X)
    cox = coxeter_data(X.quiver)
    if Y.dims != cox.tau_inv(X.dims):
        raise CatalogError("injective summand present")
    return Y
