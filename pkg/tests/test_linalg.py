from fractions import Fraction

from hypothesis import given, settings, strategies as st

from eqeuler import linalg

import oracles


def small_matrices(max_rows=4, max_cols=4, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def check_smith(a, sf):
    m, n = len(a), len(a[0])
    d = linalg.matmul(linalg.matmul(sf.U, a), sf.V)
    for i in range(m):
        for j in range(n):
            expected = sf.factors[i] if i == j and i < len(sf.factors) else 0
            assert d[i][j] == expected
    assert all(x > 0 for x in sf.factors)
    assert all(b % a_ == 0 for a_, b in zip(sf.factors, sf.factors[1:]))
    assert linalg.is_unimodular(sf.U) and linalg.is_unimodular(sf.V)


def test_smith_examples():
    sf = linalg.smith_normal_form([[2, 4], [6, 8]])
    assert sf.factors == (2, 4)
    assert linalg.smith_normal_form(linalg.identity(3)).factors == (1, 1, 1)
    zero = linalg.smith_normal_form([[0] * 3 for _ in range(3)])
    assert zero.factors == () and zero.free_rank == 3


def test_smith_known_torsion():
    sf = linalg.smith_normal_form([[2, 0, 0], [0, 3, 0], [0, 0, 0]])
    assert sf.factors == (1, 6)
    assert sf.torsion == (6,) and sf.free_rank == 1


@settings(max_examples=300, deadline=None)
@given(small_matrices())
def test_smith_matches_minor_oracle(a):
    sf = linalg.smith_normal_form(a)
    check_smith(a, sf)
    assert list(sf.factors) == oracles.minor_gcd_factors(a)


@settings(max_examples=50, deadline=None)
@given(small_matrices(7, 7, -30, 30))
def test_smith_transforms_larger(a):
    check_smith(a, linalg.smith_normal_form(a))


@settings(max_examples=100, deadline=None)
@given(small_matrices(4, 4))
def test_det_matches_laplace(a):
    if len(a) == len(a[0]):
        assert linalg.det_int(a) == oracles.det(a)


@settings(max_examples=100, deadline=None)
@given(small_matrices(5, 4))
def test_lattice_basis_spans_same_lattice(rows):
    n = len(rows[0])
    basis = linalg.LatticeBasis(n)
    for r in rows:
        basis.add(r)
    got = basis.matrix()
    if got:
        assert oracles.minor_gcd_factors(rows) == oracles.minor_gcd_factors(got)
    else:
        assert not any(map(any, rows))
    # every input row already lies in the lattice of the basis
    for r in rows:
        if got:
            assert oracles.minor_gcd_factors(got + [r]) == oracles.minor_gcd_factors(got)


@settings(max_examples=100, deadline=None)
@given(small_matrices(4, 4))
def test_inverse_and_rank(a):
    q = [[Fraction(x) for x in row] for row in a]
    r = linalg.rank(q)
    assert r == len(linalg.smith_normal_form(a).factors)
    if len(a) == len(a[0]):
        inv = linalg.inverse(q)
        assert (inv is None) == (r < len(a))
        if inv is not None:
            assert linalg.matmul(q, inv) == linalg.identity(len(a))


def test_charpoly_mod_p():
    p = 101
    m = [[1, 2], [3, 4]]
    # x^2 - 5x - 2
    assert [c % p for c in linalg.charpoly_mod(m, p)] == [(-2) % p, (-5) % p, 1]


def test_poly_roots_mod_p():
    p = 13
    # (x - 2)(x - 5) = x^2 - 7x + 10, low degree first
    roots = sorted(linalg.poly_roots_mod([10, -7 % p, 1], p))
    assert roots == [2, 5]
