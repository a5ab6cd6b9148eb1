import random

import pytest

from conftest import instance
from oracle import euler, hom_dim_oracle, rep_matrices
from props import RANDOM_QUIVERS
from tamecluster.ar import (Catalog, Regular, Transjective, Window, cone, cone_edge, enumerate_tubes, in_cone,
                            is_indecomposable, slice_modules)
from tamecluster.quiver import Quiver, ext1_dim, hom_space, is_mono
from tamecluster.reflection import coxeter_minus, coxeter_plus
from tamecluster.tilting import (TiltingError, classify_torsion, enumerate_torsion, in_torsion, maximal_cones,
                                 trace, validate_tilting)

KRONECKER = Quiver(2, ((0, 1), (0, 1)), "A~1")
D4 = Quiver(5, ((0, 2), (1, 2), (2, 3), (2, 4)), "D~4")


@pytest.mark.parametrize("Q, ranks", [
    (KRONECKER, []),
    (D4, [2, 2, 2]),
    (RANDOM_QUIVERS["D~5"], [3, 2, 2]),
    (RANDOM_QUIVERS["A~(2,1)"], [2]),
])
def test_exceptional_tube_ranks(Q, ranks):
    tubes = [t for t in enumerate_tubes(Q) if not t.homogeneous]
    assert sorted((t.rank for t in tubes), reverse=True) == ranks
    delta = Catalog(Q).cox.delta
    for t in tubes:
        assert tuple(map(sum, zip(*t.mouth_dims))) == delta


def test_d12_has_a_rank_ten_tube():
    _, T = instance("d12-example1")
    assert sorted(t.rank for t in T.catalog.exceptional_tubes()) == [2, 2, 10]


def test_kronecker_coxeter_values():
    cat = Catalog(KRONECKER)
    # tau I1 = (3, 2), tau I2 = (4, 3); tau^-1 P2 = (2, 3)
    assert cat.cox.tau((1, 0)) == (3, 2) and cat.cox.tau((2, 1)) == (4, 3)
    assert cat.cox.tau_inv((0, 1)) == (2, 3)
    assert cat.cox.delta == (1, 1)


def test_tube_mouth_is_tau_periodic():
    cat = Catalog(D4)
    for t in cat.exceptional_tubes():
        for j in range(1, t.rank + 1):
            X = cat.realize(Regular(t.tube_id, j, 1))
            Y = X
            for _ in range(t.rank):
                Y = coxeter_plus(Y)
            assert Y.dims == X.dims
            # tau^- E_j = E_{j+1}
            assert coxeter_minus(X).dims == cat.dims(Regular(t.tube_id, j % t.rank + 1, 1))


def test_catalog_realizations_are_indecomposable_with_expected_dims():
    cat = Catalog(D4, window=Window(power=2))
    for l in cat.labels():
        X = cat.realize(l)
        assert X.dims == cat.dims(l)
        assert is_indecomposable(X)
        # End is local: dim End = 1 for exceptional modules of level < rank
        if isinstance(l, Transjective):
            assert hom_dim_oracle(D4.arrows, X.dims, rep_matrices(X), X.dims, rep_matrices(X)) == 1


def _generic(H, rng):
    return H.element([rng.choice([-1, 1]) * rng.randint(1, 7) for _ in range(H.dim)])


def test_cone_is_the_set_of_submodules_of_edge_members():
    # wing oracle: X lies in cone(E) iff X embeds into a factor module on the edge of E
    Q = RANDOM_QUIVERS["D~5"]
    cat = Catalog(Q)
    t = max(cat.exceptional_tubes(), key=lambda t: t.rank)
    rng = random.Random(0)
    for m in (1, 2, 3):
        for a in range(1, t.rank + 1):
            v = Regular(t.tube_id, a, m)
            c = cone(v, t.rank)
            assert len(c.members) == m * (m + 1) // 2
            edge = cone_edge(v, t.rank)
            assert len(edge) == m and all(in_cone(e, c) for e in edge)
            for l in range(1, m + 1):
                for b in range(1, t.rank + 1):
                    X = cat.realize(Regular(t.tube_id, b, l))
                    emb = False
                    for e in edge:
                        H = hom_space(X, cat.realize(e))
                        if H.dim and any(is_mono(_generic(H, rng)) for _ in range(3)):
                            emb = True
                    assert emb == in_cone(Regular(t.tube_id, b, l), c)


def test_slice_modules():
    sl = slice_modules(D4, 2)
    assert [str(x) for x in sl.members] == ["t^2I1", "t^2I2", "t^2I3", "t^2I4", "t^2I5"]


def test_validate_rejects_bad_modules():
    cat = Catalog(D4)
    I = [Transjective("preinjective", i, 0) for i in range(1, 6)]
    assert validate_tilting(cat, I).n == 5
    with pytest.raises(TiltingError, match="duplicate"):
        validate_tilting(cat, I[:4] + [I[0]])
    with pytest.raises(TiltingError, match="count"):
        validate_tilting(cat, I[:4])
    with pytest.raises(TiltingError, match="preprojective"):
        validate_tilting(cat, I[:4] + [Transjective("preprojective", 1, 0)])


def test_literal_final_example_is_not_rigid():
    # Ext^1(I_leaf, S3) != 0 because <dim I_leaf, e_3> = -1; recomputed by the Euler form
    spec, _ = instance("d4-repaired")
    cat = Catalog(D4)
    S3 = cat.label_for_simple(2)
    for leaf in (1, 2, 4, 5):
        I = cat.realize(Transjective("preinjective", leaf, 0))
        X = cat.realize(S3)
        assert euler(D4.arrows, I.dims, X.dims) == -1
        assert ext1_dim(I, X) == 1
    with pytest.raises(TiltingError, match="not rigid"):
        validate_tilting(cat, [Transjective("preinjective", i, 0) for i in (5, 4, 1, 2)] + [S3])


def test_kronecker_torsion_matches_brute_force():
    _, T = instance("kronecker")
    tor = enumerate_torsion(T)
    assert [str(l) for l in tor.members] == ["I1", "I2"]
    cat = T.catalog
    brute = []
    for l in cat.labels():
        X = cat.realize(l)
        # Ext^1(T, X) = Hom(T, X) - <T, X>, with Hom from the Fraction oracle
        ext = sum(hom_dim_oracle(cat.Q.arrows, Y.dims, rep_matrices(Y), X.dims, rep_matrices(X))
                  - euler(cat.Q.arrows, Y.dims, X.dims) for Y in T.reps)
        if ext == 0:
            brute.append(str(l))
    assert sorted(brute) == ["I1", "I2"]


def test_torsion_free_without_preinjectives():
    cat = Catalog(KRONECKER)
    T = validate_tilting(cat, [Transjective("preprojective", 1, 0), Transjective("preprojective", 2, 0)],
                         allow_preprojective=True)
    assert classify_torsion(T) == "torsion_infinite"
    with pytest.raises(TiltingError):
        enumerate_torsion(T)


def test_trace_is_torsion_and_quotient_torsion_free():
    _, T = instance("ej2")
    cat = T.catalog
    from tamecluster.tilting import in_free, torsion_quotient
    for l in cat.labels()[:40]:
        X = cat.realize(l)
        tX, inc = trace(T, X)
        assert is_mono(inc) or tX.dim == 0
        if tX.dim:
            assert in_torsion(T, tX)
        Y, _ = torsion_quotient(T, X)
        assert Y.dim == 0 or in_free(T, Y)


def test_d12_cones():
    _, T = instance("d12-example1")
    dec = maximal_cones(T)
    got = sorted(((c.level, len(dec.summands[c.vertex])) for c in dec.cones), reverse=True)
    assert got == [(4, 4), (2, 2), (1, 1)]
    tor = enumerate_torsion(T)
    union = {m for c in dec.cones for m in c.members}
    assert all(l in union for l in tor.regular)
