# -*- coding: utf-8 -*-

import numpy
import pytest
from hypothesis import given, settings, strategies as st

from multivalent.errors import DivisionByZeroSeries, InvalidLogArgument
from multivalent.series import (TruncatedSeries, order_of_vanishing, series_deriv,
                                series_exp, series_log, series_pow)

ORDER = 16
z = TruncatedSeries.monomial(1, order=ORDER)

small_complex = st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False)


def unit_series(coeffs):
    "1 + c1 z + c2 z^2 + ..."
    return TruncatedSeries([1] + list(coeffs), 0, ORDER)


def test_product_and_repr():
    assert repr((1 + z) * (1 - z)) == '<TruncatedSeries 1 - z^2 + O(z^16)>'


def test_zero_series():
    zero = TruncatedSeries.zero(8)
    assert zero.is_zero
    assert zero.low_exp == 8
    assert zero.coefficient(3) == 0
    assert (z - z).is_zero


def test_leading_zeros_are_trimmed():
    s = TruncatedSeries([0, 0, 2, 1], 1, 10)
    assert s.low_exp == 3
    assert s.coefficient(3) == 2
    assert s.coefficient(1) == 0


def test_coefficient_beyond_order():
    with pytest.raises(IndexError):
        z.coefficient(ORDER)


def test_geometric_series_value():
    s = TruncatedSeries.constant(1, 64) / (1 - TruncatedSeries.monomial(1, order=64))
    assert abs(s(0.5) - 2) < 1e-15
    assert s.tail_bound(0.5) < 1e-15


def test_division_by_zero_series():
    with pytest.raises(DivisionByZeroSeries):
        z / TruncatedSeries.zero(ORDER)


def test_laurent_quotient():
    q = (z ** 3 + z ** 4) / z ** 2
    assert q.low_exp == 1
    assert q.coefficient(1) == 1 and q.coefficient(2) == 1


def test_derivative():
    d = series_deriv(z ** 3 + z ** 5 * 2)
    assert d.coefficient(2) == 3
    assert d.coefficient(4) == 10


def test_log_needs_constant_term():
    with pytest.raises(InvalidLogArgument):
        series_log(z + z ** 2)


def test_log_of_one_plus_z():
    log = series_log(1 + z)
    for k in range(1, ORDER):
        assert abs(log.coefficient(k) - (-1) ** (k + 1) / float(k)) < 1e-14


def test_square_root():
    root = series_pow(1 + z, 0.5)
    assert (root * root).allclose(1 + z, 1e-12)


def test_integer_power_matches_repeated_product():
    s = 1 + 2 * z + z ** 3
    assert (s ** 3).allclose(s * s * s)
    assert (s ** 0).allclose(TruncatedSeries.constant(1, ORDER))


def test_order_of_vanishing():
    assert order_of_vanishing(z ** 3 + z ** 5) == 3
    assert order_of_vanishing(1 + z ** 2, 1) == 2
    assert order_of_vanishing(TruncatedSeries.zero(ORDER)) == ORDER


@given(st.lists(small_complex, min_size=1, max_size=6))
@settings(max_examples=50, deadline=None)
def test_exp_inverts_log(coeffs):
    a = unit_series(coeffs)
    assert series_exp(series_log(a)).allclose(a, 1e-9)


@given(st.lists(small_complex, min_size=1, max_size=6),
       st.lists(small_complex, min_size=1, max_size=6))
@settings(max_examples=50, deadline=None)
def test_division_inverts_product(left, right):
    a, b = unit_series(left), unit_series(right)
    assert ((a * b) / b).allclose(a, 1e-9)


@given(st.lists(small_complex, min_size=1, max_size=6), small_complex)
@settings(max_examples=50, deadline=None)
def test_evaluation_of_sum(coeffs, w):
    a = unit_series(coeffs)
    b = TruncatedSeries(coeffs, 2, ORDER)
    assert abs((a + b)(w) - (a(w) + b(w))) < 1e-12


def test_array_evaluation():
    w = numpy.array([0.0, 0.5, 0.5j])
    assert numpy.allclose((1 + z)(w), 1 + w)
