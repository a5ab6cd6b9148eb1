"""Shared property checks (used by the property tests and the acceptance run)."""

import random

from oracle import coxeter_by_bilinear_form, euler, hom_dim_oracle, rep_matrices
from tamecluster.ar import Catalog, Homogeneous, Regular, Transjective, Window
from tamecluster.quiver import Quiver, ext1_dim, hom_dim
from tamecluster.reflection import coxeter_plus
from tamecluster.tilting import TiltingError, validate_tilting

RANDOM_QUIVERS = {
    "A~(2,1)": Quiver(3, ((0, 1), (1, 2), (0, 2)), "A~(2,1)"),
    "D~4": Quiver(5, ((0, 2), (1, 2), (2, 3), (2, 4)), "D~4"),
    "D~5": Quiver(6, ((0, 2), (1, 2), (2, 3), (3, 4), (3, 5)), "D~5"),
}


def random_tilting(name: str, seed: int, power: int = 3):
    """A random tilting module without preprojective summands, built greedily
    from rigid indecomposables of the catalog window."""
    Q = RANDOM_QUIVERS[name]
    cat = Catalog(Q, window=Window(power=power))
    cands = [l for l in cat.labels(homogeneous=False)
             if not (isinstance(l, Transjective) and l.side == "preprojective")]
    cands = [l for l in cands if not (isinstance(l, Regular) and l.level >= cat.tube(l.tube).rank)]
    rng = random.Random(seed)
    for _ in range(200):
        rng.shuffle(cands)
        chosen, reps = [], []
        for l in cands:
            X = cat.realize(l)
            if ext1_dim(X, X) or any(ext1_dim(X, Y) or ext1_dim(Y, X) for Y in reps):
                continue
            chosen.append(l)
            reps.append(X)
            if len(chosen) == Q.n:
                break
        if len(chosen) == Q.n and any(isinstance(l, Transjective) for l in chosen):
            try:
                return validate_tilting(cat, chosen)
            except TiltingError:
                continue
    raise RuntimeError("no tilting module found")


def _pairs(labels, count, rng):
    return [(rng.choice(labels), rng.choice(labels)) for _ in range(count)]


def euler_pairs(cat: Catalog, count: int, seed: int = 0):
    """Returns (checked, failures) for <dim X, dim Y> = dim Hom - dim Ext^1."""
    rng = random.Random(seed)
    labels = [l for l in cat.labels() if not isinstance(l, Homogeneous) or l.level == 1]
    arrows = cat.Q.arrows
    bad = []
    for a, b in _pairs(labels, count, rng):
        X, Y = cat.realize(a), cat.realize(b)
        if euler(arrows, X.dims, Y.dims) != hom_dim(X, Y) - ext1_dim(X, Y):
            bad.append((a, b))
    return count, bad


def hom_oracle_pairs(cat: Catalog, count: int, seed: int = 0):
    """dim Hom from the package against the Fraction oracle."""
    rng = random.Random(seed)
    labels = [l for l in cat.labels() if sum(cat.dims(l)) <= 14]
    bad = []
    for a, b in _pairs(labels, count, rng):
        X, Y = cat.realize(a), cat.realize(b)
        if hom_dim(X, Y) != hom_dim_oracle(cat.Q.arrows, X.dims, rep_matrices(X), Y.dims, rep_matrices(Y)):
            bad.append((a, b))
    return count, bad


def coxeter_check(cat: Catalog):
    """dim tau X = Phi dim X on every non-projective window entry (Phi by the Fraction oracle)."""
    n = cat.Q.n
    Phi = coxeter_by_bilinear_form(cat.Q.arrows, n)
    checked, bad = 0, []
    for l in cat.labels():
        if isinstance(l, Transjective) and l.side == "preprojective" and l.power == 0:
            continue
        X = cat.realize(l)
        tX = coxeter_plus(X)
        want = tuple(int(sum(Phi[i][j] * X.dims[j] for j in range(n))) for i in range(n))
        checked += 1
        if tX.dims != want:
            bad.append(l)
    return checked, bad


def ar_formula_pairs(cat: Catalog, count: int, seed: int = 0):
    rng = random.Random(seed)
    labels = [l for l in cat.labels() if not (isinstance(l, Transjective) and l.side == "preprojective"
                                              and l.power == 0)]
    others = cat.labels()
    bad = []
    for _ in range(count):
        a, b = rng.choice(labels), rng.choice(others)
        X, Y = cat.realize(a), cat.realize(b)
        if ext1_dim(X, Y) != hom_dim(Y, coxeter_plus(X)):
            bad.append((a, b))
    return count, bad


def rigidity(T):
    return all(ext1_dim(X, Y) == 0 for X in T.reps for Y in T.reps)
