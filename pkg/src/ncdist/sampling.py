"""Seeded random rational instances for property suites."""

from __future__ import annotations

import random
from fractions import Fraction

from .distributions import Distribution
from .series import TruncatedSeries, words_up_to


def random_rational(rng: random.Random, bound: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_series(rng: random.Random, k: int, degree: int, bound: int = 4, max_den: int = 3) -> TruncatedSeries:
    """Every coefficient drawn independently from {a/b : |a| <= bound, 1 <= b <= max_den}."""
    return TruncatedSeries(k, degree, {w: random_rational(rng, bound, max_den) for w in words_up_to(k, degree)})


def random_distribution(rng: random.Random, k: int, degree: int) -> Distribution:
    """Random moments; no positivity, which none of the algebraic identities need."""
    return Distribution(random_series(rng, k, degree))
