"""Deliberately naive reference implementations used as test oracles.

Everything here trades speed for obviousness: cofactor determinants,
direct summation formulas, and point-evaluation of polynomials.  The
library must agree with these on every tested input.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def det_cofactor(m):
    """Textbook cofactor expansion along the first row."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += sign * m[0][j] * det_cofactor(minor)
        sign = -sign
    return total


def naive_hankel_transform(terms, count):
    out = []
    for n in range(count):
        block = [
            [terms[i + j] for j in range(n + 1)] for i in range(n + 1)
        ]
        out.append(det_cofactor(block))
    return out


def naive_binomial_transform(terms):
    return [
        sum(comb(n, k) * terms[k] for k in range(n + 1)) for n in range(len(terms))
    ]


def poly_eval(coeffs, t):
    """Evaluate an ascending-coefficient polynomial at t."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc
