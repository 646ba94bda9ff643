"""Exact rational affine geometry.

Points live in d-dimensional rational space and carry a primitive integer
homogeneous vector (numerators scaled to a common positive denominator,
divided by the content), so every affine predicate reduces to integer
determinant or rank computations in the kernel backend. No floating point is
used anywhere.

A point list is *in general position* when every subset of size at most d+1
is affinely independent; coordinate-equal entries therefore always break
general position (a repeated point is a dependent pair).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from genpos._kernels import gp_extends, int_det, int_rank
from genpos.errors import DimensionMismatch, NotInGeneralPosition

__all__ = [
    "Point",
    "PointMultiset",
    "Hyperplane",
    "affinely_independent",
    "in_general_position",
    "keeps_general_position",
    "gp_number",
    "spanned_hyperplanes",
    "extend_gp",
]


class Point:
    """Immutable point with exact rational coordinates.

    ``hom`` is the primitive homogeneous integer vector
    (num_0, ..., num_{d-1}, den) with den > 0 and content 1; two points are
    equal iff their homogeneous vectors are equal.
    """

    __slots__ = ("coords", "hom")

    def __init__(self, coords):
        cs = tuple(Fraction(c) for c in coords)
        if not cs:
            raise ValueError("a point needs at least one coordinate")
        den = lcm(*(c.denominator for c in cs))
        vec = [c.numerator * (den // c.denominator) for c in cs]
        vec.append(den)
        g = gcd(*vec)
        self.coords = cs
        self.hom = tuple(v // g for v in vec)

    @property
    def d(self):
        return len(self.coords)

    def __eq__(self, other):
        return isinstance(other, Point) and self.hom == other.hom

    def __hash__(self):
        return hash(self.hom)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "Point(%s)" % ", ".join(str(c) for c in self.coords)


class PointMultiset:
    """Ordered finite multiset of points of one common dimension.

    Duplicates are kept: multiplicity matters to the complex builders even
    though it never helps general position. An empty multiset must be given
    its dimension explicitly.
    """

    __slots__ = ("points", "d")

    def __init__(self, points, d=None):
        pts = tuple(p if isinstance(p, Point) else Point(p) for p in points)
        if pts:
            dims = {p.d for p in pts}
            if len(dims) > 1:
                raise DimensionMismatch("mixed point dimensions: %s" % sorted(dims))
            inferred = pts[0].d
            if d is not None and d != inferred:
                raise DimensionMismatch("declared d=%d but points have d=%d" % (d, inferred))
            d = inferred
        elif d is None:
            raise ValueError("an empty multiset needs an explicit dimension")
        self.points = pts
        self.d = d

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return (
            isinstance(other, PointMultiset)
            and self.d == other.d
            and self.points == other.points
        )

    def __repr__(self):
        return "PointMultiset(d=%d, %r)" % (self.d, list(self.points))


def _as_points(X):
    if isinstance(X, PointMultiset):
        return list(X.points)
    return [p if isinstance(p, Point) else Point(p) for p in X]


def _common_dim(pts, fallback=None):
    dims = {p.d for p in pts}
    if len(dims) > 1:
        raise DimensionMismatch("mixed point dimensions: %s" % sorted(dims))
    if dims:
        return dims.pop()
    return fallback


def affinely_independent(points):
    """True iff the points are affinely independent (exact rank test)."""
    pts = _as_points(points)
    if len(pts) <= 1:
        return True
    d = _common_dim(pts)
    if len(pts) > d + 1:
        return False
    return int_rank([p.hom for p in pts]) == len(pts)


def keeps_general_position(prefix, p):
    """True iff appending ``p`` to ``prefix`` keeps general position.

    ``prefix`` must already be in general position; this is the incremental
    form of in_general_position and the hot predicate of every solver.
    """
    pts = _as_points(prefix)
    if not isinstance(p, Point):
        p = Point(p)
    d = _common_dim(pts, fallback=p.d)
    if p.d != d:
        raise DimensionMismatch("point has d=%d, prefix has d=%d" % (p.d, d))
    return gp_extends([q.hom for q in pts], p.hom, d)


def in_general_position(points):
    """True iff every subset of size at most d+1 is affinely independent."""
    pts = _as_points(points)
    if len(pts) <= 1:
        return True
    d = _common_dim(pts)
    homs = []
    for p in pts:
        if not gp_extends(homs, p.hom, d):
            return False
        homs.append(p.hom)
    return True


def gp_number(X):
    """Maximum size of a sub-multiset in general position.

    Repeated coordinates never help (a duplicate pair is affinely dependent),
    so the search runs on distinct points. Exact branch-and-bound: points are
    scanned in input order, a branch is cut when it cannot beat the best
    completed one.
    """
    pts = _as_points(X)
    distinct = list(dict.fromkeys(pts))
    n = len(distinct)
    if n == 0:
        return 0
    d = _common_dim(distinct)
    homs = [p.hom for p in distinct]
    best = 0
    chosen = []

    def rec(i):
        nonlocal best
        if i == n or len(chosen) + (n - i) <= best:
            return
        h = homs[i]
        if gp_extends(chosen, h, d):
            chosen.append(h)
            if len(chosen) > best:
                best = len(chosen)
            rec(i + 1)
            chosen.pop()
        rec(i + 1)

    rec(0)
    return best


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : normal . x = offset} with a canonical exact
    representation: integer coefficients of content 1, first nonzero normal
    entry positive."""

    normal: tuple
    offset: int

    def contains(self, point):
        p = point if isinstance(point, Point) else Point(point)
        if p.d != len(self.normal):
            raise DimensionMismatch("point has d=%d, hyperplane has d=%d" % (p.d, len(self.normal)))
        s = sum(n * x for n, x in zip(self.normal, p.hom[:-1]))
        return s == self.offset * p.hom[-1]

    @classmethod
    def through(cls, points):
        """The hyperplane spanned by d affinely independent points in
        dimension d."""
        pts = _as_points(points)
        if not pts:
            raise ValueError("need points to span a hyperplane")
        d = _common_dim(pts)
        if len(pts) != d:
            raise ValueError("a hyperplane in dimension %d is spanned by %d points" % (d, d))
        if not affinely_independent(pts):
            raise NotInGeneralPosition("spanning points are affinely dependent")
        return _hyperplane_through([p.hom for p in pts], d)

    def __repr__(self):
        return "Hyperplane(normal=%r, offset=%r)" % (self.normal, self.offset)


def _hyperplane_through(homs, d):
    # Null vector of the d x (d+1) homogeneous matrix via signed cofactors.
    coefs = []
    for j in range(d + 1):
        sub = [[row[t] for t in range(d + 1) if t != j] for row in homs]
        c = int_det(sub)
        coefs.append(-c if j % 2 else c)
    g = gcd(*coefs)
    coefs = [c // g for c in coefs]
    for c in coefs[:d]:
        if c != 0:
            if c < 0:
                coefs = [-x for x in coefs]
            break
    return Hyperplane(normal=tuple(coefs[:d]), offset=-coefs[d])


def spanned_hyperplanes(S):
    """All hyperplanes spanned by d-subsets of S (S must be in general
    position). For |S| >= d the result has exactly C(|S|, d) members: distinct
    d-subsets of a general-position set span distinct hyperplanes."""
    pts = _as_points(S)
    if not in_general_position(pts):
        raise NotInGeneralPosition("spanned_hyperplanes needs a general-position input")
    if not pts:
        return frozenset()
    d = _common_dim(pts)
    out = set()
    for combo in combinations(pts, d):
        out.add(_hyperplane_through([p.hom for p in combo], d))
    return frozenset(out)


def extend_gp(S, T):
    """First point of T (input order) whose addition keeps S in general
    position, or None.

    S must be in general position. Such a point always exists when T is in
    general position with |T| >= extension_bound(d, |S|+1): at most d points
    of T lie on each of the C(|S|, d) hyperplanes spanned by S.
    """
    s_pts = _as_points(S)
    t_pts = _as_points(T)
    d = _common_dim(s_pts + t_pts, fallback=getattr(T, "d", None))
    if d is None:
        return None
    homs = [p.hom for p in s_pts]
    for p in t_pts:
        if gp_extends(homs, p.hom, d):
            return p
    return None
