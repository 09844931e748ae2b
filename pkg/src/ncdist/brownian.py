"""Moments of nu boxplus gamma_t summed over non-crossing partial pairings.

Each pairing rho contributes t^(#pairs) times the indicator that paired
letters agree, times the moments of nu along the maximal completion of the
pairs on the unpaired points.  This route never touches free cumulants, so
it is an independent check on the boxplus machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .distributions import Distribution, _positive, free_convolve, semicircular_family
from .errors import DegreeExceededError, GroundSetError
from .partitions import Blocks, SetPartition, maximal_completion, nc_le2_positions
from .reports import IdentityReport, Mismatch, compare_series
from .series import TruncatedSeries, words_of_length
from .transforms import _block_product


@lru_cache(maxsize=None)
def _pairing_data(n: int) -> tuple[tuple[Blocks, tuple[tuple[int, int], ...], tuple[int, ...], Blocks], ...]:
    """For each rho in NC_{<=2}(n): (rho, pairs, singleton positions, completion on positions 0..m-1)."""
    out = []
    for rho in nc_le2_positions(n):
        pairs = tuple(b for b in rho if len(b) == 2)
        single = tuple(b[0] for b in rho if len(b) == 1)
        if single and pairs:
            hat = maximal_completion(SetPartition(pairs), single)
            index = {x: i for i, x in enumerate(single)}
            hat_blocks = tuple(tuple(index[x] for x in b) for b in hat.blocks)
        elif single:
            hat_blocks = (tuple(range(len(single))),)
        else:
            hat_blocks = ()
        out.append((rho, pairs, single, hat_blocks))
    return tuple(out)


def compatible(rho: SetPartition, w: Sequence[int]) -> bool:
    """Every pair {p, q} of rho carries equal letters w_p == w_q."""
    if rho.n != len(w):
        raise GroundSetError(f"partition of {rho.n} points cannot index a word of length {len(w)}")
    letter = dict(zip(rho.ground, w))
    return all(letter[b[0]] == letter[b[1]] for b in rho.blocks if len(b) == 2)


def brownian_terms(nu: Distribution, t, w: Sequence[int], only_compatible: bool = True):
    """Per-pairing contributions as (rho, term); rho is a partition of {1..n}."""
    t = _positive("t", t)
    w = tuple(w)
    if len(w) > nu.degree:
        raise DegreeExceededError(f"word of length {len(w)} exceeds truncation degree {nu.degree}")
    out = []
    for rho, pairs, single, hat in _pairing_data(len(w)):
        ok = all(w[p] == w[q] for p, q in pairs)
        if not ok and only_compatible:
            continue
        if ok:
            sub = tuple(w[i] for i in single)
            factor = _block_product(nu.moments.get, sub, hat) if single else Fraction(1)
            term = t ** len(pairs) * factor
        else:
            term = Fraction(0)
        out.append((SetPartition([[i + 1 for i in b] for b in rho], range(1, len(w) + 1)), term))
    return out


def brownian_moment(nu: Distribution, t, w: Sequence[int]):
    """(nu boxplus gamma_t)(X_{i_1} ... X_{i_n}) via the partial-pairing sum."""
    if len(w) == 0:
        return Fraction(1)
    return sum((term for _, term in brownian_terms(nu, t, w)), Fraction(0))


def brownian_polynomial(nu: Distribution, w: Sequence[int]) -> list:
    """Coefficients (constant first) of the moment as a polynomial in t."""
    w = tuple(w)
    if len(w) > nu.degree:
        raise DegreeExceededError(f"word of length {len(w)} exceeds truncation degree {nu.degree}")
    coeffs = [Fraction(0)] * (len(w) // 2 + 1)
    for rho, pairs, single, hat in _pairing_data(len(w)):
        if all(w[p] == w[q] for p, q in pairs):
            sub = tuple(w[i] for i in single)
            factor = _block_product(nu.moments.get, sub, hat) if single else Fraction(1)
            coeffs[len(pairs)] = coeffs[len(pairs)] + factor
    return coeffs


def brownian_series(nu: Distribution, t) -> TruncatedSeries:
    store = {}
    for n in range(1, nu.degree + 1):
        for w in words_of_length(nu.k, n):
            store[w] = brownian_moment(nu, t, w)
    return TruncatedSeries(nu.k, nu.degree, store)


def brownian_vs_convolution(nu: Distribution, t) -> IdentityReport:
    """Compare the pairing sum with nu boxplus gamma_t on every word."""
    lhs = brownian_series(nu, t)
    rhs = free_convolve(nu, semicircular_family(t, nu.k, nu.degree)).moments
    report = compare_series(f"pairing sum = nu [+] gamma_t, t={t}", lhs, rhs)
    report.details["t"] = str(t)
    return report


def _interpolate(points: Sequence[Fraction], values: Sequence) -> list:
    """Monomial coefficients of the interpolating polynomial (exact Lagrange)."""
    size = len(points)
    coeffs = [Fraction(0)] * size
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d in range(size):
            coeffs[d] += yi * basis[d] / denom
    return coeffs


def polynomial_identity_check(nu: Distribution, points: Sequence = (1, 2, 3, 5)) -> IdentityReport:
    """Compare, word by word, the t-polynomial read off the pairing sum with
    the polynomial interpolated from the boxplus route at ``points``.

    Needs len(points) > nu.degree // 2 so the interpolation is determined.
    """
    points = [Fraction(p) for p in points]
    if len(points) <= nu.degree // 2:
        raise ValueError(f"need at least {nu.degree // 2 + 1} evaluation points, got {len(points)}")
    convolved = [free_convolve(nu, semicircular_family(t, nu.k, nu.degree)).moments for t in points]
    report = IdentityReport(f"t-polynomial identity at t in {[str(p) for p in points]}")
    for n in range(1, nu.degree + 1):
        for w in words_of_length(nu.k, n):
            report.checked += 1
            exact = brownian_polynomial(nu, w)
            exact = exact + [Fraction(0)] * (len(points) - len(exact))
            fitted = _interpolate(points, [m.get(w) for m in convolved])
            if exact != fitted:
                report.mismatches.append(Mismatch(w, exact, fitted))
    return report
