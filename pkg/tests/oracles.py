"""Brute-force reference implementations, deliberately independent of ncdist."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


def set_partitions(elements):
    """Every set partition of ``elements`` as a list of sorted blocks."""
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for smaller in set_partitions(rest):
        yield [[first]] + smaller
        for i in range(len(smaller)):
            yield smaller[:i] + [[first] + smaller[i]] + smaller[i + 1:]


def crosses(blocks) -> bool:
    """a < b < c < d with a, c in one block and b, d in another."""
    owner = {x: i for i, b in enumerate(blocks) for x in b}
    points = sorted(owner)
    for a, b, c, d in itertools.combinations(points, 4):
        if owner[a] == owner[c] and owner[b] == owner[d] and owner[a] != owner[b]:
            return True
    return False


def canonical(blocks):
    return tuple(sorted(tuple(sorted(b)) for b in blocks))


def nc_partitions(elements):
    return [canonical(p) for p in set_partitions(elements) if not crosses(p)]


def interval_partitions(n: int):
    out = []
    for mask in range(2 ** (n - 1)):
        blocks, current = [], [1]
        for i in range(2, n + 1):
            if mask >> (i - 2) & 1:
                blocks.append(current)
                current = [i]
            else:
                current.append(i)
        blocks.append(current)
        out.append(canonical(blocks))
    return out


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    return sum(comb(n, 2 * j) * catalan(j) for j in range(n // 2 + 1))


def refines(p, q) -> bool:
    return all(any(set(b) <= set(c) for c in q) for b in p)


def ll(p, q) -> bool:
    """p << q straight from the definition."""
    if not refines(p, q):
        return False
    for c in q:
        lo, hi = min(c), max(c)
        if not any(lo in b and hi in b for b in p):
            return False
    return True


def coarsest(candidates):
    """The unique candidate refined-above all others, or None."""
    for c in candidates:
        if all(refines(o, c) for o in candidates):
            return c
    return None


def completion_brute(p1, other):
    candidates = [s for s in nc_partitions(other) if not crosses(list(p1) + list(s))]
    return coarsest(candidates)


def kreweras_brute(blocks, n: int):
    """Coarsest sigma on {1..n} with pi on 1,2,..,n and sigma on 1',2',..,n' jointly non-crossing."""
    unprimed = [[2 * x for x in b] for b in blocks]
    candidates = []
    for sigma in nc_partitions(range(1, n + 1)):
        primed = [[2 * x + 1 for x in b] for b in sigma]
        if not crosses(unprimed + primed):
            candidates.append(sigma)
    return coarsest(candidates)


def product_coeffs(f: dict, g: dict, degree: int) -> dict:
    out = {}
    for u, a in f.items():
        for v, b in g.items():
            if len(u) + len(v) <= degree:
                out[u + v] = out.get(u + v, 0) + a * b
    return {w: c for w, c in out.items() if c != 0}


def partition_sum(coeff: dict, word, partitions) -> Fraction:
    """Sum over partitions (blocks of 1-based positions) of products of block-restricted coefficients."""
    total = Fraction(0)
    for p in partitions:
        term = Fraction(1)
        for b in p:
            term *= coeff.get(tuple(word[i - 1] for i in b), 0)
        total += term
    return total


def matrix_power_entry(matrix, n: int, row: int = 0, col: int = 0):
    size = len(matrix)
    result = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for _ in range(n):
        result = [[sum(result[i][m] * matrix[m][j] for m in range(size)) for j in range(size)] for i in range(size)]
    return result[row][col]
