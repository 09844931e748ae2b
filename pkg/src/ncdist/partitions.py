"""Set partitions of finite totally ordered sets, with the non-crossing toolkit.

Partitions are stored canonically: every block is an increasing tuple and
blocks are ordered by their minimum, so structural equality is partition
equality and partitions can key memo tables.

Enumerators for NC(n), NC_{<=2}(n) and interval partitions generate
directly; the exhaustive set-partition generator is kept as a test oracle.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import GroundSetError, PreconditionError

ENUMERATION_ADVISORY_CAP = 12

Blocks = tuple[tuple[int, ...], ...]


def _as_ground(ground: int | Iterable[int]) -> tuple[int, ...]:
    if isinstance(ground, int):
        return tuple(range(1, ground + 1))
    g = tuple(ground)
    if any(a >= b for a, b in zip(g, g[1:])):
        g = tuple(sorted(set(g)))
    return g


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``ground`` (a strictly increasing tuple) into ``blocks``."""

    blocks: Blocks
    ground: tuple[int, ...]

    def __init__(self, blocks: Iterable[Iterable[int]], ground: Iterable[int] | None = None):
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        elements = [x for b in canon for x in b]
        if any(len(b) == 0 for b in canon):
            raise GroundSetError("blocks must be non-empty")
        if len(set(elements)) != len(elements):
            raise GroundSetError("blocks must be pairwise disjoint")
        g = tuple(sorted(elements)) if ground is None else _as_ground(ground)
        if set(g) != set(elements):
            raise GroundSetError(f"blocks cover {sorted(elements)}, ground set is {list(g)}")
        object.__setattr__(self, "blocks", canon)
        object.__setattr__(self, "ground", g)

    @classmethod
    def one(cls, ground: int | Iterable[int]) -> SetPartition:
        g = _as_ground(ground)
        return cls([g], g)

    @classmethod
    def zero(cls, ground: int | Iterable[int]) -> SetPartition:
        g = _as_ground(ground)
        return cls([(x,) for x in g], g)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def labels(self) -> dict[int, int]:
        """Map element -> index of its block."""
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, x: int) -> tuple[int, ...]:
        return self.blocks[self.labels[x]]

    def same_block(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def positions(self) -> Blocks:
        """Blocks re-expressed on 0..n-1 via the increasing bijection from the ground set."""
        index = {x: i for i, x in enumerate(self.ground)}
        return tuple(tuple(index[x] for x in b) for b in self.blocks)

    def relabel(self, ground: Sequence[int]) -> SetPartition:
        """Transport along the increasing bijection onto another ground set of the same size."""
        g = _as_ground(ground)
        if len(g) != self.n:
            raise GroundSetError("relabelling needs a ground set of the same size")
        return SetPartition([[g[i] for i in b] for b in self.positions()], g)

    def __str__(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def __repr__(self) -> str:
        return f"SetPartition({self})"


_BLOCK_RE = re.compile(r"\{([^{}]*)\}")


def parse_partition(text: str) -> SetPartition:
    """Parse the text form ``{1,9}{2,8}{3,6,7}{4,5}``."""
    stripped = text.strip()
    blocks = _BLOCK_RE.findall(stripped)
    if not blocks or _BLOCK_RE.sub("", stripped).strip():
        raise ValueError(f"not a partition in text form: {text!r}")
    return SetPartition([[int(x) for x in b.split(",") if x.strip()] for b in blocks])


def _from_positions(blocks: Blocks, ground: tuple[int, ...]) -> SetPartition:
    return SetPartition([[ground[i] for i in b] for b in blocks], ground)


def _warn_size(n: int):
    if n > ENUMERATION_ADVISORY_CAP:
        warnings.warn(f"enumerating partitions of a {n}-element set exceeds the advisory cap "
                      f"{ENUMERATION_ADVISORY_CAP}", stacklevel=3)


def _shift(blocks: Blocks, offset: int) -> Blocks:
    return tuple(tuple(x + offset for x in b) for b in blocks)


@lru_cache(maxsize=None)
def nc_positions(n: int) -> tuple[Blocks, ...]:
    """NC(n) on positions 0..n-1, built from the block containing 0.

    Choosing that block splits the rest into gaps between consecutive block
    elements; each gap independently carries any non-crossing partition.
    """
    if n == 0:
        return ((),)
    out = []
    for size in range(n):
        for rest in itertools.combinations(range(1, n), size):
            block = (0,) + rest
            bounds = block + (n,)
            gap_choices = []
            for a, b in zip(bounds, bounds[1:]):
                gap_choices.append([_shift(p, a + 1) for p in nc_positions(b - a - 1)])
            for combo in itertools.product(*gap_choices):
                blocks = [block]
                for part in combo:
                    blocks.extend(part)
                out.append(tuple(sorted(blocks)))
    return tuple(out)


@lru_cache(maxsize=None)
def nc_le2_positions(n: int) -> tuple[Blocks, ...]:
    """Non-crossing partial pairings on 0..n-1: 0 is a singleton, or pairs with j."""
    if n == 0:
        return ((),)
    out = [((0,),) + _shift(p, 1) for p in nc_le2_positions(n - 1)]
    for j in range(1, n):
        for inner in nc_le2_positions(j - 1):
            for outer in nc_le2_positions(n - 1 - j):
                out.append(tuple(sorted(((0, j),) + _shift(inner, 1) + _shift(outer, j + 1))))
    return tuple(out)


@lru_cache(maxsize=None)
def interval_positions(n: int) -> tuple[Blocks, ...]:
    """Interval partitions of 0..n-1 (compositions of n)."""
    out = []
    for cuts in itertools.product((False, True), repeat=max(n - 1, 0)):
        blocks, start = [], 0
        for i, cut in enumerate(cuts, start=1):
            if cut:
                blocks.append(tuple(range(start, i)))
                start = i
        blocks.append(tuple(range(start, n)))
        out.append(tuple(blocks))
    return tuple(out) if n else ((),)


def enumerate_nc(ground: int | Iterable[int]) -> Iterator[SetPartition]:
    """Yield every non-crossing partition of ``ground`` exactly once."""
    g = _as_ground(ground)
    if not g:
        raise GroundSetError("ground set must be non-empty")
    _warn_size(len(g))
    for blocks in nc_positions(len(g)):
        yield _from_positions(blocks, g)


def enumerate_nc_le2(ground: int | Iterable[int]) -> Iterator[SetPartition]:
    g = _as_ground(ground)
    if not g:
        raise GroundSetError("ground set must be non-empty")
    _warn_size(len(g))
    for blocks in nc_le2_positions(len(g)):
        yield _from_positions(blocks, g)


def enumerate_interval(ground: int | Iterable[int]) -> Iterator[SetPartition]:
    g = _as_ground(ground)
    if not g:
        raise GroundSetError("ground set must be non-empty")
    for blocks in interval_positions(len(g)):
        yield _from_positions(blocks, g)


def enumerate_set_partitions(ground: int | Iterable[int]) -> Iterator[SetPartition]:
    """Every set partition, via restricted growth strings (Bell-number many)."""
    g = _as_ground(ground)
    n = len(g)

    def grow(prefix: list[int], top: int):
        if len(prefix) == n:
            blocks: list[list[int]] = [[] for _ in range(top + 1)]
            for x, label in zip(g, prefix):
                blocks[label].append(x)
            yield SetPartition(blocks, g)
            return
        for label in range(top + 2):
            prefix.append(label)
            yield from grow(prefix, max(top, label))
            prefix.pop()

    if n:
        yield from grow([0], 0)


def _blocks_cross(a: Sequence[int], b: Sequence[int]) -> bool:
    # merge the two blocks and look for an a..b..a..b alternation
    merged = sorted([(x, 0) for x in a] + [(x, 1) for x in b])
    runs = 1
    for (_, s), (_, t) in zip(merged, merged[1:]):
        if s != t:
            runs += 1
            if runs >= 4:
                return True
    return False


def is_noncrossing(p: SetPartition) -> bool:
    blocks = [b for b in p.blocks if len(b) > 1]
    for a, b in itertools.combinations(blocks, 2):
        if _blocks_cross(a, b):
            return False
    return True


def _same_ground(p: SetPartition, q: SetPartition):
    if p.ground != q.ground:
        raise GroundSetError(f"ground sets differ: {list(p.ground)} vs {list(q.ground)}")


def leq_refinement(p: SetPartition, q: SetPartition) -> bool:
    """p <= q: every block of p sits inside a block of q."""
    _same_ground(p, q)
    labels = q.labels
    return all(len({labels[x] for x in b}) == 1 for b in p.blocks)


def ll_order(p: SetPartition, q: SetPartition) -> bool:
    """p << q: p <= q and each block of q has its min and max in one block of p."""
    if not leq_refinement(p, q):
        return False
    labels = p.labels
    return all(labels[c[0]] == labels[c[-1]] for c in q.blocks)


def count_ll_above(p: SetPartition, block_count: int) -> int:
    """Number of rho in NC(n) with rho >> p and |rho| = block_count."""
    if not ll_order(p, SetPartition.one(p.ground)):
        raise PreconditionError(f"{p} is not << 1_n (min and max of the ground set are in different blocks)")
    if not 1 <= block_count <= len(p):
        raise PreconditionError(f"block count must lie in 1..{len(p)}, got {block_count}")
    return comb(len(p) - 1, block_count - 1)


def count_ll_above_brute(p: SetPartition, block_count: int) -> int:
    return sum(1 for rho in enumerate_nc(p.ground) if len(rho) == block_count and ll_order(p, rho))


def restrict(p: SetPartition, subset: Iterable[int]) -> SetPartition:
    s = set(subset)
    if not s:
        raise GroundSetError("cannot restrict to the empty set")
    if not s <= set(p.ground):
        raise GroundSetError(f"{sorted(s)} is not a subset of the ground set")
    blocks = [[x for x in b if x in s] for b in p.blocks]
    return SetPartition([b for b in blocks if b], sorted(s))


def disjoint_union(p1: SetPartition, p2: SetPartition) -> SetPartition:
    if not p1.ground or not p2.ground:
        raise GroundSetError("both pieces of a disjoint union must be non-empty")
    if set(p1.ground) & set(p2.ground):
        raise GroundSetError("ground sets overlap")
    return SetPartition(p1.blocks + p2.blocks, sorted(p1.ground + p2.ground))


def _separated(blocks: Sequence[Sequence[int]], x: int, y: int) -> bool:
    # some block has points strictly inside (x, y) and strictly outside [x, y]
    for b in blocks:
        inside = outside = False
        for e in b:
            if x < e < y:
                inside = True
            elif e < x or e > y:
                outside = True
            if inside and outside:
                return True
    return False


def maximal_completion(p1: SetPartition, other: Iterable[int]) -> SetPartition:
    """The largest sigma in NC(other) such that p1 and sigma combine into a non-crossing partition.

    Two points of ``other`` share a block of the result exactly when no block
    of ``p1`` straddles them, i.e. has points both between and beyond them.
    """
    l2 = _as_ground(other)
    if not l2:
        raise GroundSetError("the complementary ground set must be non-empty")
    if set(l2) & set(p1.ground):
        raise GroundSetError("ground sets overlap")
    if not is_noncrossing(p1):
        raise PreconditionError(f"{p1} is crossing")
    classes: list[list[int]] = []
    for x in l2:
        for cls in classes:
            if not _separated(p1.blocks, cls[0], x):
                cls.append(x)
                break
        else:
            classes.append([x])
    return SetPartition(classes, l2)


def kreweras_complement(p: SetPartition) -> SetPartition:
    """Kreweras complement, via the interleaving 1 < 1' < 2 < 2' < ... ."""
    n = p.n
    unprimed = SetPartition([[2 * i for i in b] for b in p.positions()], range(0, 2 * n, 2))
    completed = maximal_completion(unprimed, range(1, 2 * n, 2))
    return SetPartition([[p.ground[(x - 1) // 2] for x in b] for b in completed.blocks], p.ground)


@lru_cache(maxsize=None)
def kreweras_positions(n: int) -> dict[Blocks, Blocks]:
    """Kreweras complements of all of NC(n), on positions 0..n-1."""
    g = tuple(range(n))
    return {b: kreweras_complement(SetPartition(b, g)).blocks for b in nc_positions(n)}


def is_partial_pairing(p: SetPartition) -> bool:
    return all(len(b) <= 2 for b in p.blocks)


def _require_pairing(rho: SetPartition):
    if not is_partial_pairing(rho):
        raise PreconditionError(f"{rho} has a block with more than two elements")


def doubletons(rho: SetPartition) -> tuple[int, ...]:
    """D(rho): union of the two-element blocks."""
    _require_pairing(rho)
    return tuple(sorted(x for b in rho.blocks if len(b) == 2 for x in b))


def singletons(rho: SetPartition) -> tuple[int, ...]:
    """S(rho): union of the one-element blocks."""
    _require_pairing(rho)
    return tuple(sorted(b[0] for b in rho.blocks if len(b) == 1))


def _require_standard(p: SetPartition, start: int):
    if p.ground != tuple(range(start, start + p.n)):
        raise GroundSetError(f"expected the ground set {{{start},...,{start + p.n - 1}}}, got {list(p.ground)}")


def assign_singletons(rho: SetPartition) -> SetPartition:
    """Attach each singleton of rho to the innermost pair around it.

    Adds the pair {0, n+1}; singletons surrounded by no pair of rho join it.
    The result is a partition of {0, ..., n+1}.
    """
    _require_standard(rho, 1)
    _require_pairing(rho)
    if not is_noncrossing(rho):
        raise PreconditionError(f"{rho} is crossing")
    n = rho.n
    pairs = [b for b in rho.blocks if len(b) == 2] + [(0, n + 1)]
    groups: dict[tuple[int, int], list[int]] = {pair: list(pair) for pair in pairs}
    for (i,) in (b for b in rho.blocks if len(b) == 1):
        # nested pairs: the innermost one around i has the largest left end
        host = max((pair for pair in pairs if pair[0] < i < pair[1]), key=lambda pair: pair[0])
        groups[host].append(i)
    return SetPartition(groups.values(), range(0, n + 2))


def in_assignment_image(pi: SetPartition) -> bool:
    """Membership in the image of :func:`assign_singletons`."""
    if pi.n < 2 or pi.ground != tuple(range(0, pi.n)):
        return False
    last = pi.n - 1
    return pi.same_block(0, last) and all(len(b) > 1 for b in pi.blocks) and is_noncrossing(pi)


def extract_pairing(pi: SetPartition) -> SetPartition:
    """Inverse of :func:`assign_singletons`: keep {min, max} of each block not containing 0."""
    _require_standard(pi, 0)
    n = pi.n - 2
    if n < 1:
        raise PreconditionError("need a partition of {0, ..., n+1} with n >= 1")
    if not pi.same_block(0, n + 1):
        raise PreconditionError(f"0 and {n + 1} lie in different blocks of {pi}")
    if any(len(b) == 1 for b in pi.blocks):
        raise PreconditionError(f"{pi} has a one-element block")
    if not is_noncrossing(pi):
        raise PreconditionError(f"{pi} is crossing")
    pairs = [(b[0], b[-1]) for b in pi.blocks if 0 not in b]
    paired = {x for pair in pairs for x in pair}
    blocks = pairs + [(i,) for i in range(1, n + 1) if i not in paired]
    return SetPartition(blocks, range(1, n + 1))
