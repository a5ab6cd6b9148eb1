from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracle import frac_rank
from tamecluster import linalg as la

small = st.integers(min_value=-3, max_value=3)


def mats(max_r=5, max_c=5):
    return st.integers(1, max_r).flatmap(
        lambda r: st.integers(1, max_c).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=150, deadline=None)
@given(mats())
def test_rank_matches_fraction_oracle(rows):
    assert la.rank(la.matrix(rows)) == frac_rank(rows)


@settings(max_examples=100, deadline=None)
@given(mats())
def test_kernel_is_kernel_of_full_dimension(rows):
    M = la.matrix(rows)
    K = la.kernel_matrix(M)
    assert K.ncols() == M.ncols() - frac_rank(rows)
    assert la.is_zero(M * K)
    if K.ncols():
        assert la.rank(K) == K.ncols()


@settings(max_examples=100, deadline=None)
@given(mats(), st.lists(small, min_size=5, max_size=5))
def test_solve_recovers_consistent_systems(rows, xs):
    M = la.matrix(rows)
    x = la.column(xs[: M.ncols()])
    b = M * x
    y = la.solve(M, b)
    assert y is not None and M * y == b


def test_solve_reports_inconsistency():
    M = la.matrix([[1, 0], [0, 0]])
    assert la.solve(M, la.column([0, 1])) is None


def test_exact_rationals_survive_roundtrip():
    M = la.matrix([[Fraction(1, 3), Fraction(-2, 7)]])
    assert la.to_fractions(M) == [[Fraction(1, 3), Fraction(-2, 7)]]


def test_trace_and_blocks():
    A = la.matrix([[1, 2], [3, 4]])
    D = la.block_diag([A, la.identity(1)])
    assert la.trace(D) == 6
    assert la.hstack([A, A]).ncols() == 4 and la.vstack([A, A]).nrows() == 4
