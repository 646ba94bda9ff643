"""Matroids as independence oracles on ground set {0, ..., n-1}.

Provides the affine matroid of a point multiset, partition and uniform
matroids, greedy rank, maximum common independent sets by shortest augmenting
paths in the exchange graph, and the uniformity layer: a set is uniform when
it is independent or all its rank-size subsets are, the uniform sets form a
complex, and that complex equals the (rank-1)-completion of the independence
complex.

All matroids here are assumed loopless (every singleton independent); the
affine matroid of a point multiset always is.
"""

from __future__ import annotations

from itertools import combinations

from genpos.complexes import SimplicialComplex, mask_of
from genpos.errors import OracleError
from genpos.geometry import PointMultiset, affinely_independent

__all__ = [
    "IndependenceOracle",
    "AffineMatroid",
    "PartitionMatroid",
    "UniformMatroid",
    "ExplicitMatroid",
    "rank",
    "matroid_intersection",
    "is_uniform",
    "max_uniform_size",
    "uniformity_complex",
    "independence_complex",
]


class IndependenceOracle:
    """Matroid given by ground-set size and a memoized independence predicate.

    Subclasses implement _independent(frozenset). rank_hint, when provided,
    is trusted as the rank of the full ground set.
    """

    def __init__(self, ground_size, rank_hint=None):
        if ground_size < 0:
            raise ValueError("ground_size must be nonnegative")
        self.ground_size = ground_size
        self.rank_hint = rank_hint
        self._memo = {frozenset(): True}
        self._full_rank = None

    def is_independent(self, subset):
        s = frozenset(subset)
        cached = self._memo.get(s)
        if cached is None:
            for e in s:
                if not 0 <= e < self.ground_size:
                    raise ValueError("element %r out of ground range" % (e,))
            cached = self._independent(s)
            self._memo[s] = cached
        return cached

    def _independent(self, s):
        raise NotImplementedError

    @property
    def full_rank(self):
        if self._full_rank is None:
            if self.rank_hint is not None:
                self._full_rank = self.rank_hint
            else:
                self._full_rank = rank(self, range(self.ground_size))
        return self._full_rank


class AffineMatroid(IndependenceOracle):
    """Element i is the i-th point; independence is affine independence.
    Coordinate-equal points are parallel elements, never loops."""

    def __init__(self, points, d=None):
        pts = points if isinstance(points, PointMultiset) else PointMultiset(points, d=d)
        super().__init__(len(pts))
        self.points = pts

    def _independent(self, s):
        return affinely_independent([self.points[i] for i in sorted(s)])


class PartitionMatroid(IndependenceOracle):
    """At most one element per block; blocks must partition the ground set."""

    def __init__(self, blocks):
        blocks = [tuple(sorted(b)) for b in blocks]
        elems = [e for b in blocks for e in b]
        n = len(elems)
        if sorted(elems) != list(range(n)):
            raise ValueError("blocks must partition 0..n-1 without overlap")
        super().__init__(n, rank_hint=sum(1 for b in blocks if b))
        self.blocks = tuple(blocks)
        self._block_of = {}
        for bi, b in enumerate(blocks):
            for e in b:
                self._block_of[e] = bi

    def _independent(self, s):
        seen = set()
        for e in s:
            b = self._block_of[e]
            if b in seen:
                return False
            seen.add(b)
        return True


class UniformMatroid(IndependenceOracle):
    """Independent iff size at most r."""

    def __init__(self, ground_size, r):
        if r < 0:
            raise ValueError("rank must be nonnegative")
        super().__init__(ground_size, rank_hint=min(ground_size, r))
        self.r = r

    def _independent(self, s):
        return len(s) <= self.r


class ExplicitMatroid(IndependenceOracle):
    """Independence given by an explicit family of sets (for tests and
    experiments; the family is trusted to be matroidal)."""

    def __init__(self, ground_size, independent_sets):
        super().__init__(ground_size)
        self._sets = frozenset(frozenset(s) for s in independent_sets)

    def _independent(self, s):
        return s in self._sets


def rank(oracle, subset):
    """Matroid rank of a subset by greedy augmentation (exact by the exchange
    property)."""
    cur = set()
    for e in sorted(set(subset)):
        cur.add(e)
        if not oracle.is_independent(cur):
            cur.discard(e)
    return len(cur)


def _augmenting_path(m1, m2, current, n):
    outside = [e for e in range(n) if e not in current]
    sources = [y for y in outside if m1.is_independent(current | {y})]
    sinks = {y for y in outside if m2.is_independent(current | {y})}
    for y in sources:
        if y in sinks:
            return [y]
    if not sources or not sinks:
        return None
    parent = {y: None for y in sources}
    queue = list(sources)
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        if u in current:
            base = current - {u}
            for y in outside:
                if y not in parent and m1.is_independent(base | {y}):
                    parent[y] = u
                    if y in sinks:
                        path = [y]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        path.reverse()
                        return path
                    queue.append(y)
        else:
            for x in sorted(current):
                if x not in parent and m2.is_independent((current - {x}) | {u}):
                    parent[x] = u
                    queue.append(x)
    return None


def matroid_intersection(m1, m2):
    """Maximum common independent set, deterministic.

    Shortest augmenting paths in the exchange graph, breadth-first with
    ascending-element tie-breaking. Augmenting along a shortest path always
    yields a common independent set one larger; if that fails the oracles do
    not describe matroids and OracleError is raised.
    """
    if m1.ground_size != m2.ground_size:
        raise ValueError("matroids must share a ground set")
    n = m1.ground_size
    current = set()
    while True:
        path = _augmenting_path(m1, m2, current, n)
        if path is None:
            return frozenset(current)
        current ^= set(path)
        if not (m1.is_independent(current) and m2.is_independent(current)):
            raise OracleError(
                "augmentation produced a dependent set; an oracle is not a matroid"
            )


def is_uniform(oracle, subset):
    """Uniform: independent, or larger than the rank r with every r-subset
    independent."""
    s = frozenset(subset)
    if oracle.is_independent(s):
        return True
    r = oracle.full_rank
    if len(s) <= r:
        return False
    return all(oracle.is_independent(frozenset(c)) for c in combinations(sorted(s), r))


def _extends_uniform(oracle, current, e, r):
    # current is uniform; test current + {e}. New rank-size subsets are
    # exactly those through e.
    if len(current) + 1 <= r:
        return oracle.is_independent(frozenset(current) | {e})
    return all(
        oracle.is_independent(frozenset(t) | {e})
        for t in combinations(current, r - 1)
    )


def max_uniform_size(oracle):
    """Largest size of a uniform set, by branch-and-bound over elements in
    ascending order."""
    n = oracle.ground_size
    if n == 0:
        return 0
    r = oracle.full_rank
    best = 0
    cur = []

    def rec(i):
        nonlocal best
        if i == n or len(cur) + (n - i) <= best:
            return
        if _extends_uniform(oracle, cur, i, r):
            cur.append(i)
            if len(cur) > best:
                best = len(cur)
            rec(i + 1)
            cur.pop()
        rec(i + 1)

    rec(0)
    return best


def _levelwise_complex(n, extends, max_card):
    faces = {0}
    level = [()]
    size = 1
    while level and size <= max_card:
        nxt = []
        for t in level:
            start = t[-1] + 1 if t else 0
            for w in range(start, n):
                if extends(t, w):
                    nxt.append(t + (w,))
                    faces.add(mask_of(t) | (1 << w))
        level = nxt
        size += 1
    return SimplicialComplex(n, faces, _validated=True)


def uniformity_complex(oracle, max_card=None):
    """Complex of uniform sets, truncated to |S| <= max_card (default r+3).

    Uniform sets are closed downward, so growing level by level in ascending
    element order enumerates them all. Equals the (r-1)-completion of the
    independence complex under the same cap.
    """
    n = oracle.ground_size
    if n == 0:
        # the empty set is uniform, so this is never void
        return SimplicialComplex(0, [0], _validated=True)
    r = oracle.full_rank
    cap = min(n, r + 3) if max_card is None else max_card
    return _levelwise_complex(
        n, lambda t, w: _extends_uniform(oracle, list(t), w, r), cap
    )


def independence_complex(oracle, max_card=None):
    """Complex of independent sets (dimension rank-1; no cap needed unless
    given)."""
    n = oracle.ground_size
    if n == 0:
        return SimplicialComplex(0, [0], _validated=True)
    cap = n if max_card is None else max_card
    return _levelwise_complex(
        n,
        lambda t, w: oracle.is_independent(frozenset(t) | {w}),
        cap,
    )
