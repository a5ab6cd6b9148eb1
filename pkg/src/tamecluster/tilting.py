"""Tilting modules, their torsion pairs, and cone decompositions of the regular part."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg as la
from .ar import Catalog, Cone, Homogeneous, Regular, Transjective, cone, in_cone, sort_labels
from .linalg import Matrix
from .quiver import Morphism, Representation, ext1_dim, hom_dim, hom_space, quotient_representation, subrepresentation


class TiltingError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass
class TiltingModule:
    catalog: Catalog
    labels: list
    reps: list[Representation] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def preinjective(self) -> list:
        return [l for l in self.labels if isinstance(l, Transjective) and l.side == "preinjective"]

    @property
    def regular(self) -> list:
        return [l for l in self.labels if isinstance(l, (Regular, Homogeneous))]

    @property
    def preprojective(self) -> list:
        return [l for l in self.labels if isinstance(l, Transjective) and l.side == "preprojective"]

    def index(self, label) -> int:
        return self.labels.index(label)


def validate_tilting(catalog: Catalog, labels: list, allow_preprojective: bool = False) -> TiltingModule:
    Q = catalog.Q
    seen = set()
    for l in labels:
        if l in seen:
            raise TiltingError(f"duplicate summand {l}", witness=(l,))
        seen.add(l)
    if not allow_preprojective:
        for l in labels:
            if isinstance(l, Transjective) and l.side == "preprojective":
                raise TiltingError(f"preprojective summand out of scope: {l}", witness=(l,))
    if len(labels) != Q.n:
        raise TiltingError(f"wrong summand count: {len(labels)} summands, need {Q.n}")
    reps = [catalog.realize(l) for l in labels]
    for a, X in zip(labels, reps):
        for b, Y in zip(labels, reps):
            if ext1_dim(X, Y):
                raise TiltingError(f"not rigid: Ext^1({a}, {b}) != 0", witness=(a, b))
    T = TiltingModule(catalog, list(labels), reps)
    if not allow_preprojective and not T.preinjective:
        raise TiltingError("no preinjective summand")
    return T


def classify_torsion(T: TiltingModule) -> str:
    return "torsion_finite" if T.preinjective else "torsion_infinite"


def in_torsion(T: TiltingModule, X: Representation) -> bool:
    return all(ext1_dim(Ti, X) == 0 for Ti in T.reps)


def in_free(T: TiltingModule, X: Representation) -> bool:
    return all(hom_dim(Ti, X) == 0 for Ti in T.reps)


def trace(T: TiltingModule, X: Representation) -> tuple[Representation, Morphism]:
    """tX, the sum of the images of all maps T -> X, with its inclusion."""
    n = X.quiver.n
    cols = [[] for _ in range(n)]
    for Ti in T.reps:
        for f in hom_space(Ti, X).basis:
            for v in range(n):
                cols[v].append(f.mats[v])
    spans = [la.hstack(c, nrows=X.dims[v]) if c else Matrix(X.dims[v], 0) for v, c in enumerate(cols)]
    return subrepresentation(X, spans)


def torsion_quotient(T: TiltingModule, X: Representation) -> tuple[Representation, Morphism]:
    """X/tX with the canonical projection."""
    _, inc = trace(T, X)
    return quotient_representation(X, inc.mats)


# ---------------------------------------------------------------- enumeration


@dataclass
class TorsionClass:
    preinjective: list
    regular: list
    bound: int

    @property
    def members(self) -> list:
        return sort_labels(self.preinjective + self.regular)


@dataclass
class ConeDecomposition:
    cones: list[Cone]
    summands: dict   # cone vertex -> list of T summands inside

    def cone_of(self, label):
        for c in self.cones:
            if in_cone(label, c):
                return c
        return None


def scan_bound(T: TiltingModule) -> int:
    """Power beyond which no tau^k I_i is torsion."""
    a_max = max(l.power for l in T.preinjective)
    return a_max + 1 + T.catalog.sincerity_threshold()


def maximal_cones(T: TiltingModule) -> ConeDecomposition:
    cat = T.catalog
    regs = [l for l in T.regular if isinstance(l, Regular)]
    cones = {l: cone(l, cat.tube(l.tube).rank) for l in regs}
    maximal = []
    for l, c in cones.items():
        if any(o != l and in_cone(l, oc) for o, oc in cones.items()):
            continue
        maximal.append(c)
    maximal.sort(key=lambda c: c.vertex.sort_key())
    summands = {c.vertex: sort_labels([l for l in regs if in_cone(l, c)]) for c in maximal}
    return ConeDecomposition(maximal, summands)


def enumerate_torsion(T: TiltingModule) -> TorsionClass:
    if classify_torsion(T) != "torsion_finite":
        raise TiltingError("torsion class is infinite (no preinjective summand)")
    cat = T.catalog
    bound = scan_bound(T)
    pre = []
    for k in range(bound):
        for i in range(cat.Q.n):
            l = Transjective("preinjective", i + 1, k)
            if in_torsion(T, _realize(cat, l)):
                pre.append(l)
    for i in range(cat.Q.n):
        l = Transjective("preinjective", i + 1, bound)
        if in_torsion(T, _realize(cat, l)):
            raise TiltingError(f"bound insufficient: {l} is torsion")
    reg = []
    for c in maximal_cones(T).cones:
        for l in c.members:
            if in_torsion(T, cat.realize(l)):
                reg.append(l)
    return TorsionClass(sort_labels(pre), sort_labels(reg), bound)


def _realize(cat: Catalog, label) -> Representation:
    if not cat.in_window(label):
        cat.window.power = max(cat.window.power, label.power)
    return cat.realize(label)
