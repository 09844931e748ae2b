import json
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

from conftest import series
from ncdist.operator_model import random_input
from ncdist.serialization import (
    FormatError,
    distribution_from_dict,
    distribution_to_dict,
    model_input_from_dict,
    model_input_to_dict,
    parse_rational,
    parse_word,
    series_from_dict,
    series_to_dict,
)
from ncdist.series import TruncatedSeries


def test_series_json_layout():
    f = TruncatedSeries(2, 3, {(1, 2, 1): F(3, 4), (2,): -2, (1,): 0})
    assert series_to_dict(f) == {"k": 2, "degree": 3, "coeffs": {"2": "-2", "1,2,1": "3/4"}}


@given(series())
def test_series_round_trip(f):
    text = json.dumps(series_to_dict(f))
    assert series_from_dict(json.loads(text)) == f


def test_distribution_views():
    r = {"k": 1, "degree": 4, "view": "r", "coeffs": {"1,1": "1"}}
    d = distribution_from_dict(r)
    assert [d.moment((1,) * n) for n in range(1, 5)] == [0, 1, 0, 2]
    eta = {"k": 1, "degree": 4, "view": "eta", "coeffs": {"1,1": "1"}}
    assert [distribution_from_dict(eta).moment((1,) * n) for n in range(1, 5)] == [0, 1, 0, 1]
    out = distribution_to_dict(d)
    assert out["role"] == "moments"
    assert distribution_from_dict(out) == d


@pytest.mark.parametrize("data", [
    {"k": 1},
    {"k": "1", "degree": 2, "coeffs": {}},
    {"k": 1, "degree": 2, "coeffs": {"1,x": "1"}},
    {"k": 1, "degree": 2, "coeffs": {"1": "1/0"}},
    {"k": 1, "degree": 2, "coeffs": {"1": 0.5}},
    {"k": 1, "degree": 2, "coeffs": {"1,1,1": "1"}},
    {"k": 1, "degree": 2, "coeffs": {"2": "1"}},
    {"k": 1, "degree": 2, "coeffs": {"": "1"}},
])
def test_malformed_series(data):
    with pytest.raises(FormatError):
        series_from_dict(data)


def test_unknown_view():
    with pytest.raises(FormatError):
        distribution_from_dict({"k": 1, "degree": 2, "view": "cdf", "coeffs": {}})


def test_scalars():
    assert parse_word("1, 2,10") == (1, 2, 10)
    assert parse_rational("-6/4") == F(-3, 2)
    assert parse_rational(3) == 3
    with pytest.raises(FormatError):
        parse_rational(True)


def test_model_input_round_trip():
    inp = random_input(3, 2, seed=1)
    back = model_input_from_dict(json.loads(json.dumps(model_input_to_dict(inp))))
    assert back.k == 2 and back.dim == 3
    for a, b in zip(inp.matrices, back.matrices):
        assert np.array_equal(a, b)
    assert np.array_equal(inp.state, back.state)


def test_model_input_errors():
    good = model_input_to_dict(random_input(2, 1, seed=2))
    with pytest.raises(FormatError):
        model_input_from_dict({**good, "k": 2})
    with pytest.raises(FormatError):
        model_input_from_dict({**good, "dim": 3})
    with pytest.raises(FormatError):
        model_input_from_dict({**good, "state": [1, 0]})
    with pytest.raises(FormatError):
        model_input_from_dict({"dim": 2})
