"""Closed-form integer sequence families.

The central object is the two-parameter triangle

    T(n, k; r) = sum_j C(k, j) * C(n-k, j) * r^j

(Pascal for r = 1, Delannoy for r = 2).  Everything else here derives from
it: central coefficients T(2n, n; r), the generalized Catalan numbers
c(n; r) = T(2n, n; r) - T(2n, n+1; r), sums of adjacent Catalan terms, and
the companion sequences whose values show up as Hankel determinants.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import series
from .errors import IndexOutOfTriangle, NonIntegerResult, UnsupportedParameter


def _t_sum(n: int, k: int, r: int) -> int:
    # Raw defining sum; empty (hence 0) whenever k > n, which the
    # Catalan difference relies on at k = n + 1.
    return sum(comb(k, j) * comb(n - k, j) * r**j for j in range(n - k + 1))


def triangle_T(n: int, k: int, r: int) -> int:
    """Triangle entry T(n, k; r); requires 0 <= k <= n."""
    if k < 0 or k > n:
        raise IndexOutOfTriangle(f"entry ({n}, {k}) lies outside the triangle")
    return _t_sum(n, k, r)


def triangle_rows(count: int, r: int):
    """First ``count`` rows of the triangle."""
    return [[_t_sum(n, k, r) for k in range(n + 1)] for n in range(count)]


def central(n: int, r: int) -> int:
    """Central coefficient T(2n, n; r)."""
    return triangle_T(2 * n, n, r)


def gen_catalan(n: int, r: int) -> int:
    """Generalized Catalan number c(n; r) = T(2n, n; r) - T(2n, n+1; r)."""
    if n < 0:
        raise IndexOutOfTriangle("n must be nonnegative")
    return _t_sum(2 * n, n, r) - _t_sum(2 * n, n + 1, r)


def catalan_sum(n: int, r: int) -> int:
    """Sum of adjacent generalized Catalan numbers c(n; r) + c(n+1; r)."""
    return gen_catalan(n, r) + gen_catalan(n + 1, r)


def b_seq(n: int, r: int, method: str = "gf") -> int:
    """Companion sequence with generating function (1-x)/(1-(r+2)x+rx^2).

    Four equivalent routes are kept around because each one independently
    certifies the others:

    - ``gf``: expand the rational generating function.
    - ``difference``: A(n) - A(n-1) with
      A(m) = sum_k C(m-k, k) (-r)^k (r+2)^(m-2k).
    - ``binomial``: sum_k C(n, k) sum_j C(j, k-j) r^(2j-k).
    - ``floor``: sum_k C(n, k) sum_{j <= k/2} C(k-j, j) r^(k-2j).
    """
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    if method == "gf":
        expansion = series.rational([1, -1], [1, -(r + 2), r], n + 1)
        value = expansion[n]
        if value.denominator != 1:
            raise NonIntegerResult(f"b({n}; {r}) expanded to {value}")
        return value.numerator
    if method == "difference":
        def partial(m: int) -> int:
            return sum(
                comb(m - k, k) * (-r) ** k * (r + 2) ** (m - 2 * k)
                for k in range(m // 2 + 1)
            )

        return partial(n) - (partial(n - 1) if n >= 1 else 0)
    if method == "binomial":
        total = 0
        for k in range(n + 1):
            inner = sum(
                comb(j, k - j) * r ** (2 * j - k)
                for j in range(n + 1)
                if 0 <= k - j <= j
            )
            total += comb(n, k) * inner
        return total
    if method == "floor":
        total = 0
        for k in range(n + 1):
            inner = sum(comb(k - j, j) * r ** (k - 2 * j) for j in range(k // 2 + 1))
            total += comb(n, k) * inner
        return total
    raise ValueError(f"unknown b_seq method {method!r}")


def gen_pell(n: int, r: int) -> int:
    """Coefficient of x^n in 1/(1 - rx - x^2)."""
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    prev, cur = 1, r
    if n == 0:
        return 1
    for _ in range(n - 1):
        prev, cur = cur, r * cur + prev
    return cur


def bessel_moments(n: int, r: int) -> int:
    """Moment sequence of e.g.f. I_0(2 sqrt(r) x): C(2m, m) r^m at n = 2m, else 0."""
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    if n % 2:
        return 0
    m = n // 2
    return comb(n, m) * r**m


def interleaved_pell(n: int) -> int:
    """Coefficient of x^n in (1 + 3x - x^2 - x^3) / (1 - 6x^2 + x^4)."""
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    expansion = series.rational([1, 3, -1, -1], [1, 0, -6, 0, 1], n + 1)
    value = expansion[n]
    if value.denominator != 1:
        raise NonIntegerResult(f"term {n} expanded to {value}")
    return value.numerator


def closed_ht(kind: str, n: int, r: int) -> int:
    """Closed-form Hankel determinant of order n+1 for a sequence family.

    - ``central``: 2^n * r^C(n+1, 2)
    - ``catalan``: r^C(n+1, 2)
    - ``sum``:     r^C(n+1, 2) * b(n+1; r)
    """
    if r < 1:
        raise UnsupportedParameter("closed forms are proved for r >= 1")
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    power = r ** comb(n + 1, 2)
    if kind == "central":
        return 2**n * power
    if kind == "catalan":
        return power
    if kind == "sum":
        return power * b_seq(n + 1, r)
    raise ValueError(f"unknown closed form kind {kind!r}")


def closed_ht_sum_r2_variant(n: int) -> int:
    """The r = 2 sum-family determinant as 2^C(n+2,2) * sum_k C(n+2, 2k) 2^(-k)."""
    if n < 0:
        raise UnsupportedParameter("n must be nonnegative")
    m = n + 2
    total = sum(Fraction(comb(m, 2 * k), 2**k) for k in range(m // 2 + 1))
    value = total * 2 ** comb(m, 2)
    if value.denominator != 1:
        raise NonIntegerResult(f"variant value at n={n} is {value}")
    return value.numerator


_FAMILIES = {
    "central": central,
    "catalan": gen_catalan,
    "sum": catalan_sum,
    "b": b_seq,
    "pell": gen_pell,
    "bessel": bessel_moments,
    "interleaved": lambda n, r: interleaved_pell(n),
}

FAMILY_NAMES = tuple(_FAMILIES)


def family_terms(name: str, count: int, r: int = 1):
    """First ``count`` terms of a named one-parameter family."""
    try:
        fn = _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown family {name!r}") from None
    return [fn(n, r) for n in range(count)]
