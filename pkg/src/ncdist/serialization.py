"""JSON forms for series, distributions and operator-model inputs.

Series: {"k": int, "degree": int, "coeffs": {"1,2,1": "3/4", ...}}; zero
coefficients are omitted on output.  Distributions add "role": "moments"
on output and accept "view": "moments" | "r" | "eta" on input.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .distributions import Distribution, from_eta, from_moments, from_r
from .errors import NCDistError
from .operator_model import ModelInput
from .reports import format_word
from .series import TruncatedSeries, Word


class FormatError(NCDistError):
    """Malformed serialized input."""


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise FormatError(f"malformed word {text!r}; expected comma-separated indices like '1,2,1'") from None


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise FormatError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"rationals must be strings like '3/4' or integers, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"malformed rational {text!r}") from None


def series_to_dict(f: TruncatedSeries) -> dict:
    return {
        "k": f.k,
        "degree": f.degree,
        "coeffs": {format_word(w): format_rational(c) for w, c in f.items()},
    }


def series_from_dict(data: dict) -> TruncatedSeries:
    try:
        k, degree, coeffs = data["k"], data["degree"], data.get("coeffs", {})
    except (KeyError, TypeError):
        raise FormatError("series JSON needs 'k', 'degree' and 'coeffs'") from None
    if not isinstance(k, int) or not isinstance(degree, int) or not isinstance(coeffs, dict):
        raise FormatError("'k' and 'degree' must be integers and 'coeffs' an object")
    parsed = {}
    for key, value in coeffs.items():
        parsed[parse_word(key)] = parse_rational(value)
    try:
        return TruncatedSeries(k, degree, parsed)
    except NCDistError as exc:
        raise FormatError(str(exc)) from None


def distribution_to_dict(d: Distribution) -> dict:
    out = series_to_dict(d.moments)
    out["role"] = "moments"
    return out


def distribution_from_dict(data: dict) -> Distribution:
    view = data.get("view", data.get("role", "moments")) if isinstance(data, dict) else None
    series = series_from_dict(data)
    if view == "moments":
        return from_moments(series)
    if view == "r":
        return from_r(series)
    if view == "eta":
        return from_eta(series)
    raise FormatError(f"unknown view {view!r}; expected 'moments', 'r' or 'eta'")


def _complex_array(data, name: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError):
        raise FormatError(f"{name}: entries must be [re, im] pairs") from None
    if arr.ndim == 0 or arr.shape[-1] != 2:
        raise FormatError(f"{name}: entries must be [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]


def model_input_from_dict(data: dict) -> ModelInput:
    try:
        dim, k, mats, state = data["dim"], data["k"], data["matrices"], data["state"]
    except (KeyError, TypeError):
        raise FormatError("model input JSON needs 'dim', 'k', 'matrices' and 'state'") from None
    matrices = tuple(_complex_array(m, f"matrices[{j}]") for j, m in enumerate(mats))
    xi = _complex_array(state, "state")
    if len(matrices) != k:
        raise FormatError(f"'k' is {k} but {len(matrices)} matrices were given")
    if xi.shape != (dim,) or any(m.shape != (dim, dim) for m in matrices):
        raise FormatError(f"shapes do not match dim={dim}")
    return ModelInput(matrices, xi)


def model_input_to_dict(inp: ModelInput) -> dict:
    def pairs(a):
        return np.stack([a.real, a.imag], axis=-1).tolist()

    return {"dim": inp.dim, "k": inp.k, "matrices": [pairs(a) for a in inp.matrices], "state": pairs(inp.state)}
