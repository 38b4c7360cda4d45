"""Number-theoretic helpers and the exact linear algebra kernel."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from commhier.errors import SingularMatrix
from commhier.exact import (Matrix, divisors, factorize, jordan_totient,
                            moebius_mu, rational_roots)


def test_factorize_small():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(97) == {97: 1}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_moebius_mu_values():
    assert [moebius_mu(n) for n in range(1, 11)] == \
        [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@given(st.integers(min_value=1, max_value=300))
def test_mertens_identity(n):
    assert sum(moebius_mu(d) for d in divisors(n)) == (1 if n == 1 else 0)


def test_divisors_sorted():
    assert divisors(28) == [1, 2, 4, 7, 14, 28]


@given(st.integers(min_value=1, max_value=200),
       st.integers(min_value=1, max_value=4))
def test_jordan_totient_divisor_sum(n, r):
    assert sum(jordan_totient(r, d) for d in divisors(n)) == n ** r


@given(st.integers(min_value=1, max_value=120))
def test_jordan_totient_rank_one_is_euler(n):
    phi = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
    assert jordan_totient(1, n) == phi


def test_rank_known():
    assert Matrix([[1, 2], [2, 4]]).rank() == 1
    assert Matrix([[1, 2], [3, 4]]).rank() == 2
    assert Matrix([[0, 0], [0, 0]]).rank() == 0
    assert Matrix([[Fraction(1, 2), Fraction(1, 3)],
                   [Fraction(3, 2), 1]]).rank() == 1


_entry = st.fractions(min_value=-9, max_value=9, max_denominator=4)


@given(st.lists(st.lists(_entry, min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_rank_transpose_invariant(rows):
    m = Matrix(rows)
    t = Matrix([[rows[i][j] for i in range(3)] for j in range(3)])
    assert m.rank() == t.rank()


@given(st.lists(st.lists(_entry, min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(_entry, min_size=3, max_size=3))
def test_appending_combination_preserves_rank(rows, coeffs):
    base = Matrix(rows)
    combo = [sum(c * rows[i][j] for i, c in enumerate(coeffs))
             for j in range(3)]
    assert Matrix(rows + [combo]).rank() == base.rank()


@given(st.lists(st.lists(_entry, min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(_entry, min_size=3, max_size=3))
def test_solve_resubstitutes(rows, rhs):
    m = Matrix(rows)
    if m.det() == 0:
        with pytest.raises(SingularMatrix):
            m.solve(rhs)
        return
    x = m.solve(rhs)
    for i in range(3):
        assert sum(rows[i][j] * x[j] for j in range(3)) == rhs[i]


def test_det_triangular():
    assert Matrix([[2, 5, 1], [0, 3, 7], [0, 0, 4]]).det() == 24


@given(st.lists(st.integers(min_value=2, max_value=30), min_size=1,
                max_size=4, unique=True))
def test_rational_roots_recovers_reciprocals(ms):
    # Build prod (x - 1/m), constant term first.
    coeffs = [Fraction(1)]
    for m in ms:
        root = Fraction(1, m)
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= root * c
        coeffs = new
    roots = rational_roots(coeffs)
    assert sorted(roots) == sorted(Fraction(1, m) for m in ms)


def test_rational_roots_irrational_poly():
    # x^2 - 2 has no rational roots.
    assert rational_roots([-2, 0, 1]) == []
