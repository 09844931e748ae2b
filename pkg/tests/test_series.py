import warnings
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals, series
from ncdist.errors import DegreeExceededError, EmptyWordError, NCDistError
from ncdist.gaussian import GaussianRational
from ncdist.series import (
    TruncatedSeries,
    as_coefficient,
    geometric_inverse_combination,
    invert_eta_to_moments,
    substitute,
    words_up_to,
)
from oracles import product_coeffs


def test_words_are_ordered_by_length_then_letters():
    assert list(words_up_to(2, 2)) == [(1,), (2,), (1, 1), (1, 2), (2, 1), (2, 2)]


def test_coefficient_errors():
    f = TruncatedSeries(2, 3, {(1, 2): 1})
    assert f[(1, 2)] == 1
    assert f[(2, 1)] == 0
    with pytest.raises(DegreeExceededError):
        f.coefficient((1, 1, 1, 1))
    with pytest.raises(EmptyWordError):
        f.coefficient(())
    with pytest.raises(NCDistError):
        f.coefficient((3,))
    with pytest.raises(EmptyWordError):
        TruncatedSeries(1, 2, {(): 1})
    with pytest.raises(DegreeExceededError):
        TruncatedSeries(1, 2, {(1, 1, 1): 1})


def test_degree_cap_warns():
    with pytest.warns(UserWarning, match="advisory cap"):
        TruncatedSeries(1, 11)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        TruncatedSeries(1, 10)


def test_float_coefficients_use_their_decimal_form():
    assert as_coefficient(0.1) == Fraction(1, 10)
    assert as_coefficient(1 + 2j) == GaussianRational(1, 2)
    assert as_coefficient(GaussianRational(3, 0)) == 3
    with pytest.raises(TypeError):
        as_coefficient(True)


def test_binary_operations_truncate_at_the_smaller_degree():
    f = TruncatedSeries(1, 5, {(1,): 1})
    g = TruncatedSeries(1, 3, {(1,): 1})
    assert (f + g).degree == 3
    assert (f * g).degree == 3
    assert (f * f * f * f).is_zero() is False
    assert (g * g * g * g).is_zero()


def test_noncommutative_product():
    z1 = TruncatedSeries.variable(1, 2, 3)
    z2 = TruncatedSeries.variable(2, 2, 3)
    assert (z1 * z2)[(1, 2)] == 1
    assert (z1 * z2)[(2, 1)] == 0


@given(series(), series())
def test_product_matches_concatenation_oracle(f, g):
    if f.k != g.k:
        return
    degree = min(f.degree, g.degree)
    expected = product_coeffs(dict(f.items()), dict(g.items()), degree)
    assert dict((f * g).items()) == expected


@given(st.data())
def test_ring_laws(data):
    k = data.draw(st.integers(1, 2))
    f, g, h = (data.draw(series(k=k, degree=4)) for _ in range(3))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h


@given(st.data())
def test_coefficient_extraction_is_linear(data):
    f, g = data.draw(series(k=2, degree=3)), data.draw(series(k=2, degree=3))
    a, b = data.draw(rationals), data.draw(rationals)
    combo = f.scale(a) + g.scale(b)
    for w in words_up_to(2, 3):
        assert combo[w] == a * f[w] + b * g[w]


@given(st.data())
def test_dilation_is_a_ring_endomorphism(data):
    f, g = data.draw(series(k=2, degree=4)), data.draw(series(k=2, degree=4))
    r = data.draw(rationals.filter(lambda x: x != 0))
    assert (f * g).dilate(r) == f.dilate(r) * g.dilate(r)
    for w, c in f.items():
        assert f.dilate(r)[w] == c * r ** len(w)


@given(series())
def test_geometric_maps_are_inverse(f):
    assert invert_eta_to_moments(geometric_inverse_combination(f)) == f
    assert geometric_inverse_combination(invert_eta_to_moments(f)) == f


def test_geometric_inverse_combination_is_m_over_one_plus_m():
    # k=1, M = z/(1-z): all moments 1, eta = z
    m = TruncatedSeries.from_function(1, 6, lambda w: 1)
    assert geometric_inverse_combination(m) == TruncatedSeries.variable(1, 1, 6)


@given(series(k=2, degree=4))
def test_substituting_the_variables_is_the_identity(f):
    xs = [TruncatedSeries.variable(i, 2, 4) for i in (1, 2)]
    assert substitute(f, xs) == f


def test_substitute_into_monomial():
    f = TruncatedSeries(1, 4, {(1, 1): 1})
    x = TruncatedSeries(1, 4, {(1,): 1, (1, 1): 2})
    # (z + 2z^2)^2 = z^2 + 4z^3 + 4z^4
    assert dict(substitute(f, [x]).items()) == {(1, 1): 1, (1, 1, 1): 4, (1, 1, 1, 1): 4}


def test_equality_and_hash_ignore_explicit_zeros():
    a = TruncatedSeries(1, 2, {(1,): 0, (1, 1): Fraction(1, 2)})
    b = TruncatedSeries(1, 2, {(1, 1): Fraction(2, 4)})
    assert a == b and hash(a) == hash(b)
