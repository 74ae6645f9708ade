"""Riordan arrays (d(x), h(x)) over exact rationals.

A proper Riordan array is a pair of truncated series with d(0) != 0,
h(0) = 0 and h'(0) != 0; column k of the associated lower-triangular
matrix is generated by d * h^k.  The group operations (product, inverse,
action on sequences) and the two named arrays built from the central and
Catalan families live here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from . import series
from .errors import IndexOutOfTriangle, InsufficientOrder, UnsupportedParameter
from .series import Series


class RiordanArray:
    """A proper Riordan array; immutable once constructed."""

    __slots__ = ("d", "h")

    def __init__(self, d: Series, h: Series):
        if d.order < 1 or d[0] == 0:
            raise ValueError("d must have a nonzero constant term")
        if h.order < 2 or h[0] != 0 or h[1] == 0:
            raise ValueError("h must satisfy h(0) = 0 and h'(0) != 0")
        self.d = d
        self.h = h

    @property
    def order(self) -> int:
        return min(self.d.order, self.h.order)

    def __eq__(self, other):
        if isinstance(other, RiordanArray):
            n = min(self.order, other.order)
            return (
                self.d.truncate(n) == other.d.truncate(n)
                and self.h.truncate(n) == other.h.truncate(n)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.d, self.h))

    def __repr__(self):
        return f"RiordanArray(d={self.d!r}, h={self.h!r})"

    def to_matrix(self, dim: int):
        """Leading dim x dim block as ragged lower-triangular rows."""
        if dim > self.order:
            raise InsufficientOrder(
                f"array of order {self.order} cannot fill a {dim} x {dim} block"
            )
        rows = [[Fraction(0)] * (n + 1) for n in range(dim)]
        col = self.d.truncate(dim)
        h = self.h.truncate(dim)
        for k in range(dim):
            for n in range(k, dim):
                rows[n][k] = col[n]
            if k + 1 < dim:
                col = col * h
        return rows

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        """Group product: (d1, h1)(d2, h2) = (d1 * (d2 o h1), h2 o h1)."""
        d = self.d * other.d.compose(self.h)
        h = other.h.compose(self.h)
        return RiordanArray(d, h)

    __mul__ = multiply

    def inverse(self) -> "RiordanArray":
        """Group inverse (1 / (d o hbar), hbar) with hbar the reversion of h."""
        hbar = self.h.revert()
        d = 1 / self.d.compose(hbar)
        return RiordanArray(d, hbar)

    def apply(self, seq) -> list:
        """Act on a sequence: the result has generating function d * (f o h)."""
        if isinstance(seq, Series):
            f = seq
        else:
            if len(seq) < self.order:
                raise InsufficientOrder(
                    f"need at least {self.order} terms, got {len(seq)}"
                )
            f = series.poly(seq, self.order)
        g = self.d * f.compose(self.h)
        return list(g.coeffs)


def identity(order: int) -> RiordanArray:
    """The identity array (1, x)."""
    return RiordanArray(series.one(order), series.x(order))


def binomial(order: int) -> RiordanArray:
    """The binomial array (1/(1-x), x/(1-x)) with entries C(n, k)."""
    return RiordanArray(
        series.rational([1], [1, -1], order),
        series.rational([0, 1], [1, -1], order),
    )


def binomial_power(k: int, order: int) -> RiordanArray:
    """Integer power of the binomial array; negative powers via the inverse."""
    if k == 0:
        return identity(order)
    base = binomial(order)
    if k < 0:
        base = base.inverse()
    out = base
    for _ in range(abs(k) - 1):
        out = out.multiply(base)
    return out


@lru_cache(maxsize=None)
def l_central(r: int, order: int) -> RiordanArray:
    """Array whose column 0 is the central-coefficient family for r.

    Built two independent ways and cross-checked on construction: the
    closed form

        (1/sqrt(1-2(r+1)x+(r-1)^2 x^2),
         (1-(r+1)x-sqrt(1-2(r+1)x+(r-1)^2 x^2)) / (2rx))

    and the inverse of ((1-rx^2)/(1+(r+1)x+rx^2), x/(1+(r+1)x+rx^2)).
    """
    if r < 1:
        raise UnsupportedParameter("r must be at least 1")
    n = order + 2
    s = series.poly([1, -2 * (r + 1), (r - 1) ** 2], n).sqrt()
    d = 1 / s
    numerator = series.poly([1, -(r + 1)], n) - s
    h = numerator.div_x(1) / (2 * r)
    direct = RiordanArray(d, h)
    base = RiordanArray(
        series.rational([1, 0, -r], [1, r + 1, r], n),
        series.rational([0, 1], [1, r + 1, r], n),
    )
    alt = base.inverse()
    if direct.to_matrix(order) != alt.to_matrix(order):
        raise RuntimeError("central array: closed form and inverse form disagree")
    return RiordanArray(direct.d.truncate(order), direct.h.truncate(order))


@lru_cache(maxsize=None)
def l_catalan(r: int, order: int) -> RiordanArray:
    """Array whose column 0 is the generalized Catalan family for r:
    the inverse of (1/(1+rx), x/(1+(r+1)x+rx^2))."""
    if r < 1:
        raise UnsupportedParameter("r must be at least 1")
    return RiordanArray(
        series.rational([1], [1, r], order),
        series.rational([0, 1], [1, r + 1, r], order),
    ).inverse()


def central_l_entry(n: int, k: int, r: int, method: str = "sumA") -> int:
    """General term of the central array by one of two double sums.

    ``sumA``: sum_j C(n, j) C(n, j-k) r^(j-k)
    ``sumB``: sum_j C(n, j) C(j, n-k-j) r^(n-k-j) (r+1)^(2j-(n-k))
    """
    if k < 0 or k > n:
        raise IndexOutOfTriangle(f"entry ({n}, {k}) lies outside the triangle")
    if method == "sumA":
        return sum(comb(n, j) * comb(n, j - k) * r ** (j - k) for j in range(k, n + 1))
    if method == "sumB":
        total = 0
        for j in range(n + 1):
            m = n - k - j
            if 0 <= m <= j:
                total += comb(n, j) * comb(j, m) * r**m * (r + 1) ** (2 * j - (n - k))
        return total
    raise ValueError(f"unknown method {method!r}")


def egf_column_coeff(n: int, k: int, r: int) -> int:
    """Entry (n, k) of the central array read off its column e.g.f.:
    n! [x^n] e^((r+1)x) * sum_j r^j x^(2j+k) / (j! (j+k)!)."""
    if k < 0 or k > n:
        raise IndexOutOfTriangle(f"entry ({n}, {k}) lies outside the triangle")
    total = 0
    j = 0
    while 2 * j + k <= n:
        total += (
            comb(n, j)
            * comb(n - j, j + k)
            * r**j
            * (r + 1) ** (n - 2 * j - k)
        )
        j += 1
    return total
