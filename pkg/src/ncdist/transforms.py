"""Partition-indexed coefficient functionals and the series bijections built on them.

Every map here is a sum over a family of non-crossing partitions of products
of block-restricted coefficients.  The partition families (NC(n), the
partitions that are << 1_n, interval partitions) are computed once per n and
shared by all words of that length.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Sequence

from .errors import DegreeExceededError, DomainError, GroundSetError
from .partitions import Blocks, SetPartition, interval_positions, ll_order, nc_positions
from .reports import IdentityReport, compare_series
from .series import TruncatedSeries, Word, as_coefficient, substitute, words_of_length


@lru_cache(maxsize=None)
def ll_one_positions(n: int) -> tuple[Blocks, ...]:
    """Partitions pi in NC(n) with pi << 1_n, i.e. 0 and n-1 share a block."""
    return tuple(p for p in nc_positions(n) if any(b[0] == 0 and b[-1] == n - 1 for b in p))


def _block_product(get: Callable[[Word], object], w: Word, blocks: Blocks):
    value = 1
    for b in blocks:
        c = get(tuple(w[i] for i in b))
        if c == 0:
            return 0
        value = value * c
    return value


def generalized_coefficient(w: Sequence[int], p: SetPartition, f: TruncatedSeries):
    """Product over blocks B of p of the coefficient of w|B in f.

    ``p`` may live on any ground set of size |w|; positions are matched
    through the increasing bijection.
    """
    w = tuple(w)
    if p.n != len(w):
        raise GroundSetError(f"partition of {p.n} points cannot index a word of length {len(w)}")
    if len(w) > f.degree:
        raise DegreeExceededError(f"word of length {len(w)} exceeds truncation degree {f.degree}")
    value = Fraction(1)
    for b in p.positions():
        value = value * f.coefficient(tuple(w[i] for i in b))
    return value


@lru_cache(maxsize=None)
def _indexed_table(table: Callable[[int], Sequence[Blocks]], n: int, skip_full: bool = False):
    """The distinct blocks occurring in table(n), and each partition as indices into them."""
    parts = table(n)
    if skip_full:
        full = (tuple(range(n)),)
        parts = [p for p in parts if p != full]
    distinct = sorted({b for p in parts for b in p})
    index = {b: i for i, b in enumerate(distinct)}
    return tuple(distinct), tuple(tuple(index[b] for b in p) for p in parts)


def _sum_of_products(values: Sequence, parts: Sequence[tuple[int, ...]], alternate: bool = False):
    """Sum over parts of the product of values[i] for i in the part.

    With ``alternate`` the terms carry the sign (-1)**(1 + len(part)).
    Rational inputs are accumulated as integer pairs and reduced once.
    """
    if all(type(v) is Fraction or type(v) is int for v in values):
        nums = [v.numerator for v in values]
        dens = [v.denominator for v in values]
        total_num, total_den = 0, 1
        for part in parts:
            num = den = 1
            for i in part:
                a = nums[i]
                if not a:
                    break
                num *= a
                den *= dens[i]
            else:
                if alternate and len(part) % 2 == 0:
                    num = -num
                if den == total_den:
                    total_num += num
                else:
                    common = total_den // gcd(total_den, den) * den
                    total_num = total_num * (common // total_den) + num * (common // den)
                    total_den = common
        return Fraction(total_num, total_den) if total_num else 0
    total = 0
    for part in parts:
        term = 1
        for i in part:
            term = term * values[i]
        total = total + (-term if alternate and len(part) % 2 == 0 else term)
    return total


def _partition_sum(f: TruncatedSeries, table: Callable[[int], Sequence[Blocks]],
                   alternate: bool = False) -> TruncatedSeries:
    store = {}
    for n in range(1, f.degree + 1):
        distinct, parts = _indexed_table(table, n)
        for w in words_of_length(f.k, n):
            values = [f.get(tuple(w[i] for i in b)) for b in distinct]
            total = _sum_of_products(values, parts, alternate)
            if total != 0:
                store[w] = total
    return TruncatedSeries._raw(f.k, f.degree, store)


def _recursive_inverse(m: TruncatedSeries, table: Callable[[int], Sequence[Blocks]]) -> TruncatedSeries:
    """Invert m = sum_{pi in table(n)} Cf_{w;pi}(x) degree by degree.

    Every partition other than the one-block partition only involves shorter
    words, so x_w = m_w - (the rest of the sum).
    """
    store: dict[Word, object] = {}
    for n in range(1, m.degree + 1):
        distinct, parts = _indexed_table(table, n, True)
        for w in words_of_length(m.k, n):
            values = [store.get(tuple(w[i] for i in b), 0) for b in distinct]
            total = m.get(w) - _sum_of_products(values, parts)
            if total != 0:
                store[w] = total
    return TruncatedSeries._raw(m.k, m.degree, store)


def reta(f: TruncatedSeries) -> TruncatedSeries:
    """Coefficient of w in the image: sum over pi << 1_n of Cf_{w;pi}(f)."""
    return _partition_sum(f, ll_one_positions)


def reta_inverse(g: TruncatedSeries) -> TruncatedSeries:
    return -reta(-g)


def reta_inverse_signed(g: TruncatedSeries) -> TruncatedSeries:
    """The inverse written as sum over pi << 1_n of (-1)**(1+|pi|) Cf_{w;pi}(g)."""
    return _partition_sum(g, ll_one_positions, alternate=True)


def reta_pi(w: Sequence[int], rho: SetPartition, f: TruncatedSeries):
    """Sum over pi << rho of Cf_{w;pi}(f); equals Cf_{w;rho}(reta(f))."""
    w = tuple(w)
    n = len(w)
    if rho.n != n:
        raise GroundSetError(f"partition of {rho.n} points cannot index a word of length {n}")
    if n > f.degree:
        raise DegreeExceededError(f"word of length {n} exceeds truncation degree {f.degree}")
    target = SetPartition(rho.positions(), range(n))
    total = 0
    for blocks in nc_positions(n):
        if ll_order(SetPartition(blocks, range(n)), target):
            total = total + _block_product(f.get, w, blocks)
    return as_coefficient(total)


def reta_scaled_compose(s, f: TruncatedSeries) -> IdentityReport:
    """Check reta(s reta(f)) == s/(1+s) reta((1+s) f)."""
    s = as_coefficient(s)
    if s == -1:
        raise DomainError("s = -1 is excluded; use reta(-reta(f)) == -f instead")
    lhs = reta(reta(f).scale(s))
    rhs = reta(f.scale(1 + s)).scale(s / (1 + s))
    report = compare_series(f"reta(s*reta(f)) = s/(1+s)*reta((1+s)f), s={s}", lhs, rhs)
    report.details["s"] = str(s)
    return report


def moments_from_free_cumulants(r: TruncatedSeries) -> TruncatedSeries:
    """Moment series from the R-transform: sum over all of NC(n)."""
    return _partition_sum(r, nc_positions)


def free_cumulants_from_moments(m: TruncatedSeries) -> TruncatedSeries:
    """R-transform from the moment series, by subtracting the non-trivial NC(n) terms."""
    return _recursive_inverse(m, nc_positions)


def moments_from_boolean_cumulants(b: TruncatedSeries) -> TruncatedSeries:
    """Moment series from the eta-series: sum over interval partitions."""
    return _partition_sum(b, interval_positions)


def boolean_cumulants_from_moments(m: TruncatedSeries) -> TruncatedSeries:
    return _recursive_inverse(m, interval_positions)


def functional_equation_check(r: TruncatedSeries, m: TruncatedSeries) -> IdentityReport:
    """Check R(z_1(1+M), ..., z_k(1+M)) == M."""
    k, degree = m.k, min(m.degree, r.degree)
    xs = []
    for i in range(1, k + 1):
        z = TruncatedSeries.variable(i, k, degree)
        xs.append(z + z * m.truncate(degree))
    return compare_series("R(z(1+M)) = M", substitute(r.truncate(degree), xs), m.truncate(degree))
