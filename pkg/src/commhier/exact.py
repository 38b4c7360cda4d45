"""Exact arithmetic kernel: elementary number theory and rational linear algebra.

Everything here is exact.  Integers are Python ints, rationals are
``fractions.Fraction``; no floating point enters any computation or assertion.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import SingularMatrix


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division, as {prime: exponent}."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def moebius_mu(n: int) -> int:
    """Classical Moebius function: 0 on non-squarefree n, else (-1)^#primes."""
    if n < 1:
        raise ValueError(f"moebius_mu requires n >= 1, got {n}")
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def jordan_totient(r: int, n: int) -> int:
    """J_r(n) = sum over d|n of mu(d) (n/d)^r.

    Counts the r-tuples generating a cyclic group of order n; J_1 is Euler's
    totient.  J_r(1) = 1 for every r, including r = 0.
    """
    if n < 1:
        raise ValueError(f"jordan_totient requires n >= 1, got {n}")
    if r < 0:
        raise ValueError(f"jordan_totient requires r >= 0, got {r}")
    return sum(moebius_mu(d) * (n // d) ** r for d in divisors(n))


class Matrix:
    """Dense rectangular matrix over the rationals.

    Entries are normalized to Fraction at construction.  Immutable by
    convention: no method mutates self.
    """

    def __init__(self, entries):
        rows = [[Fraction(x) for x in row] for row in entries]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows in matrix")
        self.entries = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __repr__(self):
        return f"Matrix({self.entries!r})"

    def _integer_rows(self) -> list[list[int]]:
        # Clear denominators row by row; row scaling preserves rank.
        cleared = []
        for row in self.entries:
            lcm = 1
            for x in row:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
            cleared.append([int(x * lcm) for x in row])
        return cleared

    def rank(self) -> int:
        """Rank over Q by fraction-free (Bareiss) elimination on cleared rows."""
        m = self._integer_rows()
        nr, nc = self.nrows, self.ncols
        rank = 0
        prev = 1
        col = 0
        for col in range(nc):
            pivot_row = next(
                (i for i in range(rank, nr) if m[i][col] != 0), None)
            if pivot_row is None:
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pivot = m[rank][col]
            for i in range(rank + 1, nr):
                for j in range(col + 1, nc):
                    m[i][j] = (pivot * m[i][j] - m[i][col] * m[rank][j]) // prev
                m[i][col] = 0
            prev = pivot
            rank += 1
            if rank == nr:
                break
        return rank

    def det(self) -> Fraction:
        """Determinant of a square matrix, by exact Gaussian elimination."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [row[:] for row in self.entries]
        n = self.nrows
        det = Fraction(1)
        for col in range(n):
            pivot_row = next((i for i in range(col, n) if m[i][col] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                det = -det
            pivot = m[col][col]
            det *= pivot
            for i in range(col + 1, n):
                factor = m[i][col] / pivot
                for j in range(col, n):
                    m[i][j] -= factor * m[col][j]
        return det

    def solve(self, rhs) -> list[Fraction]:
        """Unique exact solution x of self @ x = rhs for invertible self."""
        if self.nrows != self.ncols:
            raise ValueError("solve requires a square matrix")
        if len(rhs) != self.nrows:
            raise ValueError("rhs length does not match matrix size")
        n = self.nrows
        m = [row[:] + [Fraction(rhs[i])] for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot_row = next((i for i in range(col, n) if m[i][col] != 0), None)
            if pivot_row is None:
                raise SingularMatrix("matrix is singular")
            m[col], m[pivot_row] = m[pivot_row], m[col]
            pivot = m[col][col]
            for i in range(n):
                if i == col:
                    continue
                factor = m[i][col] / pivot
                if factor:
                    for j in range(col, n + 1):
                        m[i][j] -= factor * m[col][j]
        return [m[i][n] / m[i][i] for i in range(n)]


def rank_exact(matrix: Matrix) -> int:
    return matrix.rank()


def solve_linear_exact(matrix: Matrix, rhs) -> list[Fraction]:
    return matrix.solve(rhs)


def rational_roots(coeffs) -> list[Fraction]:
    """All rational roots, with multiplicity, of a polynomial with rational
    coefficients (constant term first: coeffs[k] multiplies x^k).

    Clears denominators to a primitive integer polynomial, scans p/q
    candidates with p | constant and q | leading, and verifies by exact
    evaluation; repeated roots are found by deflation.  Irrational roots are
    simply absent from the output.
    """
    poly = [Fraction(c) for c in coeffs]
    while poly and poly[-1] == 0:
        poly.pop()
    if not poly:
        raise ValueError("zero polynomial")
    if len(poly) == 1:
        return []

    roots: list[Fraction] = []
    while len(poly) > 1:
        # Primitive integer form of the current (deflated) polynomial.
        lcm = 1
        for c in poly:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ipoly = [int(c * lcm) for c in poly]
        content = 0
        for c in ipoly:
            content = gcd(content, c)
        ipoly = [c // content for c in ipoly]

        # Strip zero roots first.
        if ipoly[0] == 0:
            roots.append(Fraction(0))
            poly = poly[1:]
            continue

        found = None
        for p in divisors(abs(ipoly[0])):
            for q in divisors(abs(ipoly[-1])):
                if gcd(p, q) != 1:
                    continue
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _eval_poly(ipoly, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        poly = _deflate(poly, found)
    return sorted(roots)


def _eval_poly(coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(poly: list[Fraction], root: Fraction) -> list[Fraction]:
    # Synthetic division by (x - root); remainder is known to vanish.
    out = [Fraction(0)] * (len(poly) - 1)
    carry = Fraction(0)
    for k in range(len(poly) - 1, 0, -1):
        carry = poly[k] + carry * root
        out[k - 1] = carry
    return out
