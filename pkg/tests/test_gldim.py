import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tamecluster import linalg as la
from tamecluster.gldim import (GlDimError, algebra_from_table, free_module, global_dimension, minimal_resolution,
                               projective_dimension, simple_module, syzygy)


def linear_algebra(n: int, radical_square_zero: bool):
    """k-category on 0 < 1 < ... < n-1 with one map i -> j for each allowed pair."""
    allowed = lambda i, j: i == j or j == i + 1 or (not radical_square_zero and j > i)
    dims = {(i, j): int(allowed(i, j)) for i in range(n) for j in range(n)}
    mult = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if dims[(i, j)] and dims[(j, k)]:
                    d = dims[(i, k)]
                    mult[(i, j, k)] = [la.matrix([[1]] if d else [], d, 1)]
    scalars = {i: [1] for i in range(n)}
    return algebra_from_table([f"v{i}" for i in range(n)], dims, mult, scalars)


def test_auslander_algebra_of_a2_has_global_dimension_two():
    # objects S2 -> P1 -> S1, the composite is zero
    E = linear_algebra(3, radical_square_zero=True)
    assert global_dimension(E) == 2
    # the middle simple has the explicit resolution 0 -> P(S2) -> P(P1) -> S(P1) -> 0 (contravariant side)
    assert projective_dimension(E, simple_module(E, 1)) == 1
    assert max(projective_dimension(E, simple_module(E, j)) for j in range(3)) == 2


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 7))
def test_linear_quivers(n):
    assert global_dimension(linear_algebra(n, False)) == 1
    assert global_dimension(linear_algebra(n, True)) == n - 1


def test_semisimple_and_projectives():
    E = linear_algebra(1, False)
    assert global_dimension(E) == 0
    E = linear_algebra(4, False)
    F = free_module(E, [2, 3])
    assert projective_dimension(E, F) == 0
    objs, K = syzygy(E, F)
    assert sorted(objs) == [2, 3] and K.total == 0


def test_cutoff_is_an_error():
    E = linear_algebra(6, True)
    with pytest.raises(GlDimError, match="cutoff"):
        global_dimension(E, cutoff=3)


def test_loewy_length():
    assert linear_algebra(4, True).loewy_length() == 2
    assert linear_algebra(4, False).loewy_length() == 4


def test_resolution_terms():
    E = linear_algebra(3, True)
    # modules are contravariant: A(-, 0) is simple, the simple at 2 needs two steps
    assert minimal_resolution(E, simple_module(E, 0), 10).length == 0
    res = minimal_resolution(E, simple_module(E, 2), 10)
    assert res.length == 2 and res.terms == [[2], [1], [0]]
