"""Truncated power series in non-commuting indeterminates z_1..z_k.

A series stores the coefficients of all monomials z_{i_1}...z_{i_n} with
1 <= n <= degree.  The constant term is always zero and is never stored.
Coefficients are exact: ``Fraction`` by default, ``GaussianRational`` when
the operator-model bridge feeds complex moments in.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import AlphabetMismatchError, DegreeExceededError, EmptyWordError, NCDistError
from .gaussian import GaussianRational

Word = tuple[int, ...]

DEFAULT_DEGREE = 6
DEGREE_ADVISORY_CAP = 10


def as_coefficient(value):
    """Coerce ``value`` into an exact coefficient."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, GaussianRational):
        return value if value.imag != 0 else value.real
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, float):
        # decimal-derived, not binary-exact
        return Fraction(repr(value))
    if isinstance(value, complex):
        return GaussianRational.from_complex(value)
    return Fraction(value)


def check_word(word: Sequence[int], k: int) -> Word:
    w = tuple(int(i) for i in word)
    for letter in w:
        if not 1 <= letter <= k:
            raise NCDistError(f"letter {letter} outside alphabet 1..{k}")
    return w


def words_of_length(k: int, n: int) -> Iterator[Word]:
    """All words of length ``n`` over 1..k, in lexicographic order."""
    return itertools.product(range(1, k + 1), repeat=n)


def words_up_to(k: int, degree: int) -> Iterator[Word]:
    """All non-empty words of length <= ``degree``, ordered by (length, letters)."""
    for n in range(1, degree + 1):
        yield from words_of_length(k, n)


def _word_key(w: Word):
    return (len(w), w)


class TruncatedSeries:
    """Immutable truncated series with vanishing constant term.

    Binary operations truncate at the smaller of the two degrees; nothing
    beyond ``degree`` is ever extrapolated.
    """

    __slots__ = ("_k", "_degree", "_coeffs", "_hash")

    def __init__(self, k: int, degree: int, coeffs: Mapping[Sequence[int], object] | None = None):
        if k < 1:
            raise NCDistError(f"alphabet size must be >= 1, got {k}")
        if degree < 1:
            raise NCDistError(f"truncation degree must be >= 1, got {degree}")
        if degree > DEGREE_ADVISORY_CAP:
            warnings.warn(
                f"truncation degree {degree} exceeds the advisory cap {DEGREE_ADVISORY_CAP}; "
                "partition sums grow like Catalan numbers",
                stacklevel=2,
            )
        store: dict[Word, object] = {}
        for key, value in (coeffs or {}).items():
            w = check_word(key, k)
            if not w:
                raise EmptyWordError("the constant term of a series is always zero")
            if len(w) > degree:
                raise DegreeExceededError(f"word {w} is longer than the truncation degree {degree}")
            c = as_coefficient(value)
            if c != 0:
                store[w] = c
        self._k = k
        self._degree = degree
        self._coeffs = store
        self._hash = None

    @classmethod
    def _raw(cls, k: int, degree: int, store: dict) -> TruncatedSeries:
        # trusted constructor: keys already valid, values exact and nonzero
        obj = cls.__new__(cls)
        obj._k = k
        obj._degree = degree
        obj._coeffs = store
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, k: int, degree: int) -> TruncatedSeries:
        return cls(k, degree)

    @classmethod
    def variable(cls, i: int, k: int, degree: int) -> TruncatedSeries:
        """The series z_i."""
        return cls(k, degree, {(i,): 1})

    @classmethod
    def from_function(cls, k: int, degree: int, func: Callable[[Word], object]) -> TruncatedSeries:
        return cls(k, degree, {w: func(w) for w in words_up_to(k, degree)})

    @property
    def k(self) -> int:
        return self._k

    @property
    def degree(self) -> int:
        return self._degree

    def coefficient(self, word: Sequence[int]):
        w = tuple(word)
        if not w:
            raise EmptyWordError("series have no constant term; the empty word has no coefficient")
        if len(w) > self._degree:
            raise DegreeExceededError(
                f"coefficient of a length-{len(w)} word is unknown at truncation degree {self._degree}"
            )
        check_word(w, self._k)
        return self._coeffs.get(w, Fraction(0))

    __getitem__ = coefficient

    def get(self, word: Word):
        """Unchecked lookup for hot loops; callers guarantee the word is valid."""
        return self._coeffs.get(word, 0)

    def items(self) -> list[tuple[Word, object]]:
        """Nonzero coefficients in canonical (length, letters) order."""
        return sorted(self._coeffs.items(), key=lambda kv: _word_key(kv[0]))

    def support(self) -> Iterable[Word]:
        return self._coeffs.keys()

    def is_zero(self) -> bool:
        return not self._coeffs

    def valuation(self) -> int:
        """Length of the shortest word with nonzero coefficient (degree + 1 for zero)."""
        return min((len(w) for w in self._coeffs), default=self._degree + 1)

    def truncate(self, degree: int) -> TruncatedSeries:
        if degree > self._degree:
            raise DegreeExceededError(f"cannot extend a degree-{self._degree} series to degree {degree}")
        store = {w: c for w, c in self._coeffs.items() if len(w) <= degree}
        return TruncatedSeries._raw(self._k, degree, store)

    def _check_same_alphabet(self, other: TruncatedSeries):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other._k != self._k:
            raise AlphabetMismatchError(f"alphabet sizes differ: {self._k} vs {other._k}")

    def add(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_alphabet(other)
        degree = min(self._degree, other._degree)
        store = {w: c for w, c in self._coeffs.items() if len(w) <= degree}
        for w, c in other._coeffs.items():
            if len(w) > degree:
                continue
            s = store.get(w, 0) + c
            if s != 0:
                store[w] = s
            else:
                store.pop(w, None)
        return TruncatedSeries._raw(self._k, degree, store)

    def scale(self, c) -> TruncatedSeries:
        c = as_coefficient(c)
        if c == 0:
            return TruncatedSeries._raw(self._k, self._degree, {})
        return TruncatedSeries._raw(self._k, self._degree, {w: c * v for w, v in self._coeffs.items()})

    def multiply(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_same_alphabet(other)
        return _product(self, other, min(self._degree, other._degree))

    def dilate(self, r) -> TruncatedSeries:
        r = as_coefficient(r)
        powers = [Fraction(1)]
        for _ in range(self._degree):
            powers.append(powers[-1] * r)
        store = {}
        for w, c in self._coeffs.items():
            v = powers[len(w)] * c
            if v != 0:
                store[w] = v
        return TruncatedSeries._raw(self._k, self._degree, store)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.add(other)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.add(other.scale(-1))

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.multiply(other)
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._k == other._k and self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._k, self._degree, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self):
        terms = ", ".join(f"{','.join(map(str, w))}: {c}" for w, c in self.items()[:8])
        more = ", ..." if len(self._coeffs) > 8 else ""
        return f"TruncatedSeries(k={self._k}, degree={self._degree}, {{{terms}{more}}})"


def _product(f: TruncatedSeries, g: TruncatedSeries, degree: int) -> TruncatedSeries:
    """Cauchy product computed up to ``degree``.

    The caller vouches that both factors are known far enough for the
    result to be valid up to ``degree``.
    """
    by_length: dict[int, list[tuple[Word, object]]] = {}
    for v, b in g._coeffs.items():
        by_length.setdefault(len(v), []).append((v, b))
    store: dict[Word, object] = {}
    for u, a in f._coeffs.items():
        room = degree - len(u)
        for m in range(1, room + 1):
            for v, b in by_length.get(m, ()):
                w = u + v
                store[w] = store.get(w, 0) + a * b
    store = {w: c for w, c in store.items() if c != 0}
    return TruncatedSeries._raw(f._k, degree, store)


def coefficient(f: TruncatedSeries, w: Sequence[int]):
    return f.coefficient(w)


def add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f.add(g)


def scale(c, f: TruncatedSeries) -> TruncatedSeries:
    return f.scale(c)


def multiply(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f.multiply(g)


def dilate(f: TruncatedSeries, r) -> TruncatedSeries:
    """f o D_r: the coefficient of every length-n word is multiplied by r**n."""
    return f.dilate(r)


def _signed_geometric(f: TruncatedSeries, sign: int) -> TruncatedSeries:
    # sum_{j>=1} sign**(j+1) f**j; f has no constant term so f**j starts at degree j
    result = f
    power = f
    for j in range(2, f.degree + 1):
        power = _product(power, f, f.degree)
        if power.is_zero():
            break
        result = result.add(power if sign > 0 or j % 2 == 1 else power.scale(-1))
    return result


def geometric_inverse_combination(f: TruncatedSeries) -> TruncatedSeries:
    """f (1 + f)^{-1}, the map taking a moment series to its eta-series."""
    return _signed_geometric(f, -1)


def invert_eta_to_moments(f: TruncatedSeries) -> TruncatedSeries:
    """f (1 - f)^{-1}, the inverse of :func:`geometric_inverse_combination`."""
    return _signed_geometric(f, 1)


def substitute(f: TruncatedSeries, xs: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """Evaluate f(x_1, ..., x_k) for series x_i with vanishing constant term.

    Uses the left-factor expansion f = sum_i z_i (c_i + D_i f), where D_i f
    collects the coefficients of words starting with i, with the first
    letter stripped.
    """
    if len(xs) != f.k:
        raise AlphabetMismatchError(f"need {f.k} substitutions, got {len(xs)}")
    k = xs[0].k
    for x in xs:
        if x.k != k:
            raise AlphabetMismatchError("substituted series use different alphabets")
    degree = min([f.degree] + [x.degree for x in xs])
    xs = [x.truncate(degree) for x in xs]

    def tails(store: dict[Word, object]) -> dict[int, dict[Word, object]]:
        out: dict[int, dict[Word, object]] = {}
        for w, c in store.items():
            out.setdefault(w[0], {})[w[1:]] = c
        return out

    def evaluate(store: dict[Word, object], deg: int) -> TruncatedSeries:
        # store maps possibly-empty words to coefficients; returns sum c_w x_w up to deg
        result = TruncatedSeries._raw(k, deg, {})
        if deg < 1:
            return result
        for i, sub in tails(store).items():
            head = xs[i - 1].truncate(deg)
            const = sub.pop((), 0)
            if const != 0:
                result = result.add(head.scale(const))
            if sub and deg >= 2:
                inner = evaluate(sub, deg - 1)
                result = result.add(_product(head, inner, deg))
        return result

    return evaluate({w: c for w, c in f._coeffs.items()}, degree)
