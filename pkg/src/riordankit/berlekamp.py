"""Minimal linear recurrences from Hankel systems, and their triangles.

For a sequence a and window size d, solve

    H_d * g = (a_d, ..., a_(2d-1))^T

with H_d the d x d Hankel block.  Row n of the recurrence triangle is the
solution at window n+1; the monic characteristic polynomial, the companion
matrix, and two cross-checks against Riordan machinery follow from it.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import riordan, sequences, series
from .errors import InsufficientTerms, SingularSystem
from .hankel import hankel_matrix
from .linalg import solve


def solve_bm(a, d: int):
    """Recurrence coefficients g for window size d; needs 2d terms."""
    if d < 1:
        raise ValueError("window size must be at least 1")
    if len(a) < 2 * d:
        raise InsufficientTerms(f"need {2 * d} terms for window size {d}")
    h = hankel_matrix(a, d)
    rhs = list(a[d : 2 * d])
    try:
        return solve(h, rhs)
    except SingularSystem:
        raise SingularSystem(d) from None


def bm_triangle(a, count: int):
    """Rows of solutions for window sizes 1..count.

    On a singular window the error carries the failing size and the rows
    already computed, which is usually the interesting diagnostic.
    """
    rows = []
    for d in range(1, count + 1):
        try:
            rows.append(solve_bm(a, d))
        except SingularSystem as exc:
            raise SingularSystem(d, partial=rows) from exc
    return rows


def char_poly(a, d: int):
    """Ascending coefficients of the monic polynomial x^d - sum g_(i+1) x^i."""
    g = solve_bm(a, d)
    return [-c for c in g] + [Fraction(1)]


def companion_check(a, d: int):
    """The matrix H_d^(-1) H'_d with H'(i,j) = a_(i+j+1).

    Structure is asserted before returning: ones on the sub-diagonal,
    zeros elsewhere, and the recurrence coefficients in the last column.
    """
    if len(a) < 2 * d:
        raise InsufficientTerms(f"need {2 * d} terms for window size {d}")
    h = hankel_matrix(a, d)
    cols = []
    for j in range(d):
        shifted = [a[i + j + 1] for i in range(d)]
        cols.append(solve(h, shifted))
    m = [[cols[j][i] for j in range(d)] for i in range(d)]
    g = solve_bm(a, d)
    for i in range(d):
        for j in range(d - 1):
            expected = Fraction(1 if i == j + 1 else 0)
            if m[i][j] != expected:
                raise RuntimeError(f"companion structure broken at ({i}, {j})")
        if m[i][d - 1] != g[i]:
            raise RuntimeError(f"companion last column broken at row {i}")
    return m


def catalan_bm_term(n: int, k: int):
    """Closed form for the Catalan recurrence triangle:
    (-1)^(n-k) (C(n+k+1, 2k) - C(0, n-k+1))."""
    def c(p, q):
        return comb(p, q) if 0 <= q <= p else 0

    return (-1) ** (n - k) * (c(n + k + 1, 2 * k) - c(0, n - k + 1))


def coefficient_riordan_check(r: int, count: int):
    """Triangle whose row d holds the ascending characteristic coefficients
    of the generalized Catalan family at window d.

    Asserted equal to the expansion of (1/(1+rx), x/(1+(r+1)x+rx^2)), the
    inverse of the Catalan-family array.
    """
    terms = [sequences.gen_catalan(n, r) for n in range(2 * max(count - 1, 1))]
    rows = [[Fraction(1)]]
    for d in range(1, count):
        rows.append(char_poly(terms, d))
    base = riordan.RiordanArray(
        series.rational([1], [1, r], count + 1),
        series.rational([0, 1], [1, r + 1, r], count + 1),
    )
    if rows != base.to_matrix(count):
        raise RuntimeError("characteristic rows do not match the inverse array")
    return rows


def bm_gf_check(r: int, count: int):
    """Expand the bivariate generating function

        (r(1+x) + xy) / ((1-xy)(1+(r+1)x+rx^2-xy))

    and assert its coefficient rows reproduce the recurrence triangle of
    the generalized Catalan family.  Returns the table."""
    num = [[r], [r, 1]]
    den = series.poly2_mul([[1], [0, -1]], [[1], [r + 1, -1], [r]])
    table = series.bivariate_expand(num, den, count)
    terms = [sequences.gen_catalan(n, r) for n in range(2 * count)]
    expected = bm_triangle(terms, count)
    if table.rows != expected:
        raise RuntimeError("generating function rows do not match the solved rows")
    return table
