"""Joint distributions of k-tuples at fixed truncation degree.

A :class:`Distribution` is its moment series; the empty-word moment is
implicitly 1.  The R-transform (free cumulants) and eta-series (Boolean
cumulants) are derived views, and every operation is routed through the view
that linearizes it.  No positivity is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import AlphabetMismatchError, DomainError, PreconditionError
from .partitions import kreweras_positions, nc_positions
from .reports import IdentityReport, compare_series
from .series import (
    TruncatedSeries,
    as_coefficient,
    geometric_inverse_combination,
    invert_eta_to_moments,
    words_of_length,
)
from .transforms import _block_product, free_cumulants_from_moments, moments_from_free_cumulants, reta


@dataclass(frozen=True, eq=True)
class Distribution:
    moments: TruncatedSeries

    @property
    def k(self) -> int:
        return self.moments.k

    @property
    def degree(self) -> int:
        return self.moments.degree

    def moment(self, word) -> object:
        """mu(X_{i_1} ... X_{i_n}); the empty word gives 1."""
        if len(word) == 0:
            return Fraction(1)
        return self.moments.coefficient(word)

    @cached_property
    def eta(self) -> TruncatedSeries:
        return geometric_inverse_combination(self.moments)

    @cached_property
    def r(self) -> TruncatedSeries:
        return free_cumulants_from_moments(self.moments)

    def truncate(self, degree: int) -> Distribution:
        return Distribution(self.moments.truncate(degree))

    def __repr__(self):
        return f"Distribution(k={self.k}, degree={self.degree}, moments={self.moments!r})"


def from_moments(m: TruncatedSeries) -> Distribution:
    return Distribution(m)


def from_eta(f: TruncatedSeries) -> Distribution:
    d = Distribution(invert_eta_to_moments(f))
    d.__dict__["eta"] = f
    return d


def from_r(g: TruncatedSeries) -> Distribution:
    d = Distribution(moments_from_free_cumulants(g))
    d.__dict__["r"] = g
    return d


def eta_view(d: Distribution) -> TruncatedSeries:
    return d.eta


def r_view(d: Distribution) -> TruncatedSeries:
    return d.r


def delta0(k: int, degree: int) -> Distribution:
    """All moments zero: the identity for both additive convolutions."""
    return Distribution(TruncatedSeries.zero(k, degree))


def delta1(k: int, degree: int) -> Distribution:
    """All moments one (a k-tuple of units): the identity for the multiplicative convolution."""
    return Distribution(TruncatedSeries.from_function(k, degree, lambda w: 1))


def _check_pair(d1: Distribution, d2: Distribution):
    if d1.k != d2.k:
        raise AlphabetMismatchError(f"alphabet sizes differ: {d1.k} vs {d2.k}")
    if d1.degree != d2.degree:
        raise PreconditionError(f"truncation degrees differ: {d1.degree} vs {d2.degree}")


def _positive(name: str, value, allow_zero: bool = False) -> Fraction:
    v = as_coefficient(value)
    if not isinstance(v, Fraction):
        raise DomainError(f"{name} must be rational, got {value}")
    if v < 0 or (v == 0 and not allow_zero):
        raise DomainError(f"{name} must be {'>= 0' if allow_zero else '> 0'}, got {v}")
    return v


def free_convolve(d1: Distribution, d2: Distribution) -> Distribution:
    _check_pair(d1, d2)
    return from_r(d1.r + d2.r)


def boolean_convolve(d1: Distribution, d2: Distribution) -> Distribution:
    _check_pair(d1, d2)
    return from_eta(d1.eta + d2.eta)


def free_power(d: Distribution, t) -> Distribution:
    t = _positive("t", t)
    if t == 1:
        return d
    return from_r(d.r.scale(t))


def boolean_power(d: Distribution, t) -> Distribution:
    t = _positive("t", t)
    if t == 1:
        return d
    return from_eta(d.eta.scale(t))


BT_ROUTES = ("composition", "r", "eta")


def bbp_transform(d: Distribution, t, route: str = "composition") -> Distribution:
    """B_t(mu) = (mu^{boxplus(1+t)})^{uplus 1/(1+t)}.

    ``route`` picks the computation: the defining composition of powers, or
    R_{B_t(mu)} = reta(t R_mu)/t, or eta_{B_t(mu)} = reta(t eta_mu)/t.
    """
    t = _positive("t", t, allow_zero=True)
    if t == 0:
        return d
    if route == "composition":
        return boolean_power(free_power(d, 1 + t), 1 / (1 + t))
    if route == "r":
        return from_r(reta(d.r.scale(t)).scale(1 / t))
    if route == "eta":
        return from_eta(reta(d.eta.scale(t)).scale(1 / t))
    raise ValueError(f"unknown route {route!r}; expected one of {BT_ROUTES}")


def commuted_exponents(p, q) -> tuple[Fraction, Fraction]:
    """(p', q') with (mu^{boxplus p})^{uplus q} = (mu^{uplus q'})^{boxplus p'}."""
    p, q = as_coefficient(p), as_coefficient(q)
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if not q > (p - 1) / p:
        raise DomainError(f"q must exceed (p-1)/p = {(p - 1) / p}, got {q}")
    q_new = 1 - p + p * q
    return p * q / q_new, q_new


def exponent_commutation(d: Distribution, p, q) -> IdentityReport:
    p_new, q_new = commuted_exponents(p, q)
    lhs = boolean_power(free_power(d, p), q)
    rhs = free_power(boolean_power(d, q_new), p_new)
    report = compare_series(f"(mu^[+]{p})^[u]{q} = (mu^[u]{q_new})^[+]{p_new}", lhs.moments, rhs.moments)
    report.details.update({"p": str(p), "q": str(q), "p_prime": str(p_new), "q_prime": str(q_new)})
    return report


def dilate_dist(d: Distribution, r) -> Distribution:
    r = _positive("r", r)
    return Distribution(d.moments.dilate(r))


def mult_convolve(d1: Distribution, d2: Distribution) -> Distribution:
    """Joint distribution of x_1 y_1, ..., x_k y_k for free tuples x ~ d1, y ~ d2.

    Moment of w: sum over pi in NC(n) of the free cumulants of d1 along pi
    times the moments of d2 along the Kreweras complement of pi.
    """
    _check_pair(d1, d2)
    r1, m2 = d1.r, d2.moments
    store = {}
    for n in range(1, d1.degree + 1):
        complements = kreweras_positions(n)
        for w in words_of_length(d1.k, n):
            total = 0
            for pi in nc_positions(n):
                a = _block_product(r1.get, w, pi)
                if a == 0:
                    continue
                total = total + a * _block_product(m2.get, w, complements[pi])
            if total != 0:
                store[w] = total
    return Distribution(TruncatedSeries._raw(d1.k, d1.degree, store))


def power_dilation_identities(d1: Distribution, d2: Distribution, t) -> IdentityReport:
    """Check both (mu^t) [x] (nu^t) = (mu [x] nu)^t o D_t, for free and Boolean powers."""
    t = _positive("t", t)
    prod = mult_convolve(d1, d2)
    free_lhs = mult_convolve(free_power(d1, t), free_power(d2, t))
    free_rhs = dilate_dist(free_power(prod, t), t)
    report = compare_series(f"free powers, t={t}", free_lhs.moments, free_rhs.moments)
    bool_lhs = mult_convolve(boolean_power(d1, t), boolean_power(d2, t))
    bool_rhs = dilate_dist(boolean_power(prod, t), t)
    report.merge(compare_series(f"boolean powers, t={t}", bool_lhs.moments, bool_rhs.moments))
    report.name = f"power/dilation identities, t={t}"
    return report


def semicircular_family(t, k: int, degree: int) -> Distribution:
    """gamma_t: free centered semicirculars of variance t, R = t(z_1^2 + ... + z_k^2)."""
    t = _positive("t", t)
    if degree < 2:
        return from_r(TruncatedSeries.zero(k, degree))
    return from_r(TruncatedSeries(k, degree, {(i, i): t for i in range(1, k + 1)}))


def phi_eta(nu: Distribution) -> TruncatedSeries:
    """sum_i z_i (1 + M_nu) z_i, at degree nu.degree + 2."""
    k, degree = nu.k, nu.degree + 2
    store = {(i, i): Fraction(1) for i in range(1, k + 1)}
    for w, c in nu.moments.items():
        for i in range(1, k + 1):
            store[(i,) + w + (i,)] = c
    return TruncatedSeries._raw(k, degree, store)


def phi_map(nu: Distribution) -> Distribution:
    """Phi(nu): the distribution whose eta-series is sum_i z_i (1 + M_nu) z_i.

    The output degree is nu.degree + 2.
    """
    return from_eta(phi_eta(nu))


def phi_brownian_identity(nu: Distribution, t) -> IdentityReport:
    """Check Phi(nu boxplus gamma_t) == B_t(Phi(nu))."""
    t = _positive("t", t)
    lhs = phi_map(free_convolve(nu, semicircular_family(t, nu.k, nu.degree)))
    rhs = bbp_transform(phi_map(nu), t)
    report = compare_series(f"Phi(nu [+] gamma_t) = B_t(Phi(nu)), t={t}", lhs.moments, rhs.moments)
    report.details["t"] = str(t)
    return report
