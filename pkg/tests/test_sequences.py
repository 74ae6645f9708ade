"""Sequence families: frozen value tables and cross-formula agreement."""

from __future__ import annotations

from math import comb

import pytest

from riordankit import sequences
from riordankit.errors import (
    IndexOutOfTriangle,
    NonIntegerResult,
    UnsupportedParameter,
)


@pytest.mark.parametrize(
    "n,k,r,value",
    [
        (0, 0, 1, 1),
        (4, 2, 1, 6),
        (2, 1, 2, 3),
        (6, 3, 2, 63),
    ],
)
def test_triangle_entries(n, k, r, value):
    assert sequences.triangle_T(n, k, r) == value


def test_triangle_reduces_to_pascal_at_r1():
    rows = sequences.triangle_rows(7, 1)
    assert rows == [[comb(n, k) for k in range(n + 1)] for n in range(7)]


def test_triangle_row_with_central_delannoy_numbers():
    assert sequences.triangle_rows(3, 2)[2] == [1, 3, 1]


def test_triangle_symmetry():
    for r in range(1, 6):
        for n in range(21):
            row = [sequences.triangle_T(n, k, r) for k in range(n + 1)]
            assert row == row[::-1], (n, r)


def test_triangle_index_errors():
    with pytest.raises(IndexOutOfTriangle):
        sequences.triangle_T(3, 4, 1)
    with pytest.raises(IndexOutOfTriangle):
        sequences.triangle_T(3, -1, 1)


FROZEN = {
    ("central", 1): [1, 2, 6, 20, 70, 252],
    ("central", 2): [1, 3, 13, 63, 321, 1683, 8989],
    ("catalan", 1): [1, 1, 2, 5, 14, 42, 132, 429],
    ("catalan", 2): [1, 2, 6, 22, 90, 394, 1806, 8558],
    ("catalan", 3): [1, 3, 12, 57, 300, 1686, 9912, 60213],
    ("sum", 1): [2, 3, 7, 19, 56, 174, 561],
    ("sum", 2): [3, 8, 28, 112, 484, 2200, 10364],
    ("sum", 3): [4, 15, 69, 357, 1986, 11598, 70125],
    ("b", 1): [1, 2, 5, 13, 34, 89],
    ("b", 2): [1, 3, 10, 34, 116, 396],
    ("b", 3): [1, 4, 17, 73, 314, 1351],
    ("pell", 1): [1, 1, 2, 3, 5, 8],
    ("pell", 2): [1, 2, 5, 12, 29, 70],
    ("pell", 3): [1, 3, 10, 33, 109, 360],
    ("bessel", 2): [1, 0, 4, 0, 24, 0, 160],
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_family_value_tables(key):
    name, r = key
    assert sequences.family_terms(name, len(FROZEN[key]), r) == FROZEN[key]


def test_interleaved_pell_values_and_scaling():
    assert sequences.family_terms("interleaved", 6) == [1, 3, 5, 17, 29, 99]
    scaled = [4 ** (n * n // 4) * sequences.interleaved_pell(n) for n in range(5)]
    assert scaled == [1, 3, 20, 272, 7424]


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        sequences.family_terms("fibonacci", 4, 1)


def test_catalan_from_central_difference():
    # c(n) = C(2n, n) / (n + 1) at r = 1.
    for n in range(10):
        assert sequences.gen_catalan(n, 1) == comb(2 * n, n) // (n + 1)


def test_sum_family_is_consecutive_catalan_sum():
    for r in range(1, 5):
        for n in range(8):
            assert sequences.catalan_sum(n, r) == sequences.gen_catalan(
                n, r
            ) + sequences.gen_catalan(n + 1, r)


def test_b_methods_agree_on_the_full_grid():
    methods = ("gf", "difference", "binomial", "floor")
    for r in range(1, 6):
        for n in range(21):
            values = {m: sequences.b_seq(n, r, m) for m in methods}
            assert len(set(values.values())) == 1, (n, r, values)


def test_b_unknown_method_rejected():
    with pytest.raises(ValueError):
        sequences.b_seq(3, 2, "newton")


def test_b_is_binomial_transform_of_pell():
    for r in range(1, 6):
        pell = [sequences.gen_pell(j, r) for j in range(21)]
        for n in range(21):
            direct = sum(comb(n, j) * pell[j] for j in range(n + 1))
            assert sequences.b_seq(n, r) == direct, (n, r)


def test_bessel_moments_definition():
    for r in range(1, 5):
        for n in range(12):
            expected = comb(n, n // 2) * r ** (n // 2) if n % 2 == 0 else 0
            assert sequences.bessel_moments(n, r) == expected


def test_bessel_moments_via_inverse_binomial_transform():
    # Applying the (r+1)-fold inverse binomial transform to the central
    # family strips the exponential factor and leaves the aerated moments.
    for r in range(1, 4):
        central = [sequences.central(j, r) for j in range(10)]
        for n in range(10):
            direct = sum(
                comb(n, j) * (-(r + 1)) ** (n - j) * central[j]
                for j in range(n + 1)
            )
            assert sequences.bessel_moments(n, r) == direct


@pytest.mark.parametrize(
    "kind,r,values",
    [
        ("central", 1, [1, 2, 4, 8]),
        ("central", 2, [1, 4, 32, 512]),
        ("catalan", 3, [1, 3, 27, 729]),
        ("sum", 1, [2, 5, 13, 34]),
        ("sum", 2, [3, 20, 272, 7424]),
        ("sum", 3, [4, 51, 1971, 228906]),
    ],
)
def test_closed_form_determinant_values(kind, r, values):
    assert [sequences.closed_ht(kind, n, r) for n in range(4)] == values


def test_closed_form_guards():
    with pytest.raises(UnsupportedParameter):
        sequences.closed_ht("central", 2, 0)
    with pytest.raises(UnsupportedParameter):
        sequences.closed_ht("central", -1, 2)
    with pytest.raises(ValueError):
        sequences.closed_ht("motzkin", 2, 1)


def test_sum_variant_matches_closed_form_up_to_15():
    for n in range(16):
        assert sequences.closed_ht_sum_r2_variant(n) == sequences.closed_ht(
            "sum", n, 2
        )


def test_central_exponential_expansion():
    for r in range(1, 5):
        for n in range(12):
            direct = sum(
                comb(n, 2 * k) * comb(2 * k, k) * r**k * (r + 1) ** (n - 2 * k)
                for k in range(n // 2 + 1)
            )
            assert sequences.central(n, r) == direct
