"""Deciding and constructing systems of general-position representatives.

A family X_1, ..., X_m of finite point multisets in dimension d admits a
*system of general-position representatives* when one point can be picked
from each set so that the m picks are in general position. This module
provides:

- the bound formulas: extension_bound(d, k) points in general position always
  contain one extending a given general-position (k-1)-set; greedy_bound(d, k)
  on every union's gp_number makes the two-phase greedy succeed;
  connectivity_bound(d, k) on gp_number(X) forces homological k-connectivity
  of the general-position complex; representative_bound feeds the family size
  back through the connectivity route; uniform_connectivity_bound is the
  matroid analogue driven by max_uniform_size;
- check_condition, evaluating a bound on every (or a sampled set of) nonempty
  subfamily union;
- solve_greedy (reorder by the extension bound, then extend step by step),
  solve_exhaustive (backtracking over all picks, the completeness oracle),
  and solve_matroid_intersection (complete for m <= d+1);
- counterexample_family, the construction showing the size condition alone is
  not sufficient once m > d+1 >= 3;
- general_position_complex and independence_complex of a point multiset.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from genpos.complexes import DEFAULT_FACE_BUDGET, SimplicialComplex, mask_of
from genpos.errors import BudgetExceeded, ConstructionError
from genpos.geometry import (
    Point,
    PointMultiset,
    extend_gp,
    gp_number,
    in_general_position,
)
from genpos._kernels import gp_extends
from genpos import matroids

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "PointFamily",
    "SubsetCheck",
    "ConditionReport",
    "SgprResult",
    "BoundTable",
    "extension_bound",
    "greedy_bound",
    "connectivity_bound",
    "representative_bound",
    "uniform_connectivity_bound",
    "bound_table",
    "check_condition",
    "solve_greedy",
    "solve_exhaustive",
    "solve_matroid_intersection",
    "counterexample_family",
    "general_position_complex",
    "independence_complex",
]

DEFAULT_NODE_BUDGET = 10**7


# ---------------------------------------------------------------------------
# bounds


def extension_bound(d, k):
    """Points in general position guaranteeing a one-point extension of any
    general-position (k-1)-set: k for k <= d+1, else d*C(k-1, d) + 1 (at most
    d points can sit on each of the C(k-1, d) spanned hyperplanes)."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if k < 1:
        raise ValueError("k must be at least 1")
    if k <= d + 1:
        return k
    return d * comb(k - 1, d) + 1


def greedy_bound(d, k):
    """Threshold on gp_number of every k-subfamily union that guarantees the
    greedy solver succeeds: k * (extension_bound(d, k) - 1) + 1."""
    return k * (extension_bound(d, k) - 1) + 1


def connectivity_bound(d, k):
    """gp_number(X) above which the general-position complex of X is
    homologically k-connected: d*C(2k+2, d) + 1 in general; k+2 when d = 1 or
    k <= d-1, where the complex is a join of discrete sets or a matroid
    independence complex and the bound is exact."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if k < -1:
        raise ValueError("connectivity degree must be >= -1")
    if d == 1 or k <= d - 1:
        return k + 2
    return d * comb(2 * k + 2, d) + 1


def representative_bound(d, k):
    """Threshold on gp_number of every k-subfamily union that guarantees a
    representative system via the connectivity route: connectivity_bound(d, k-2).
    For d = 1 this is exactly k, recovering the sharp matching condition."""
    if k < 1:
        raise ValueError("family size must be at least 1")
    return connectivity_bound(d, k - 2)


def uniform_connectivity_bound(r, k):
    """max_uniform_size above which the uniformity complex of a rank-r matroid
    is homologically k-connected: (r-1)*C(2k+2, r-1) + 1."""
    if r < 2:
        raise ValueError("rank must be at least 2")
    if k < -1:
        raise ValueError("connectivity degree must be >= -1")
    return (r - 1) * comb(2 * k + 2, r - 1) + 1


@dataclass(frozen=True)
class BoundTable:
    ds: tuple
    ks: tuple
    rows: tuple


def bound_table(ds, ks):
    """All bounds tabulated over dimension and size ranges; the matroid column
    uses rank r = d+1, the rank of the affine matroid in dimension d."""
    rows = []
    for d in ds:
        for k in ks:
            rows.append(
                {
                    "d": d,
                    "k": k,
                    "A": extension_bound(d, k),
                    "B": greedy_bound(d, k),
                    "g_upper": connectivity_bound(d, k),
                    "f_upper": representative_bound(d, k),
                    "r": d + 1,
                    "h_upper": uniform_connectivity_bound(d + 1, k),
                }
            )
    return BoundTable(ds=tuple(ds), ks=tuple(ks), rows=tuple(rows))


# ---------------------------------------------------------------------------
# families and the condition checker


@dataclass(eq=False)
class PointFamily:
    """A family of point multisets in one common dimension, with a memoized
    gp_number on subfamily unions (condition checks revisit the same unions)."""

    d: int
    sets: tuple
    _gp_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        sets = tuple(
            X if isinstance(X, PointMultiset) else PointMultiset(X, d=self.d)
            for X in self.sets
        )
        if not sets:
            raise ValueError("a family needs at least one set")
        for X in sets:
            if X.d != self.d:
                raise ValueError("set dimension %d != family dimension %d" % (X.d, self.d))
        object.__setattr__(self, "sets", sets)

    @property
    def m(self):
        return len(self.sets)

    def union_points(self, indices=None):
        idx = range(self.m) if indices is None else sorted(indices)
        out = []
        for i in idx:
            out.extend(self.sets[i].points)
        return out

    def gp_number_of_union(self, indices):
        key = frozenset(indices)
        got = self._gp_cache.get(key)
        if got is None:
            got = gp_number(self.union_points(key))
            self._gp_cache[key] = got
        return got


@dataclass(frozen=True)
class SubsetCheck:
    indices: tuple
    gp_number: int
    required: int
    ok: bool


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    mode: str
    checks: tuple
    first_violation: SubsetCheck | None


def check_condition(family, bound, mode="all-subsets", samples=200, rng=None,
                    subset_budget=None, stop_early=False):
    """Evaluate gp_number(union of X_i, i in I) >= bound(|I|) over nonempty
    subfamilies I.

    mode "all-subsets" enumerates all 2^m - 1 of them (m <= 20, and within
    subset_budget); mode "sampled" draws ``samples`` distinct nonempty subsets
    with the given random generator. bound is a callable k -> int. With
    stop_early the scan ends at the first violation, so a negative report
    carries only the checks made up to that point.
    """
    m = family.m
    budget = DEFAULT_NODE_BUDGET if subset_budget is None else subset_budget
    if mode == "all-subsets":
        if m > 20 or 2**m - 1 > budget:
            raise BudgetExceeded(
                "all-subsets mode would enumerate 2^%d - 1 subfamilies" % m
            )
        subsets = [
            combo for size in range(1, m + 1) for combo in combinations(range(m), size)
        ]
    elif mode == "sampled":
        if rng is None:
            raise ValueError("sampled mode needs an rng")
        want = min(samples, 2**m - 1)
        seen = set()
        while len(seen) < want:
            combo = tuple(i for i in range(m) if rng.random() < 0.5)
            if combo:
                seen.add(combo)
        subsets = sorted(seen, key=lambda c: (len(c), c))
    else:
        raise ValueError("unknown mode %r" % (mode,))
    checks = []
    first_violation = None
    for combo in subsets:
        got = family.gp_number_of_union(combo)
        req = bound(len(combo))
        ok = got >= req
        check = SubsetCheck(indices=combo, gp_number=got, required=req, ok=ok)
        checks.append(check)
        if not ok and first_violation is None:
            first_violation = check
            if stop_early:
                break
    return ConditionReport(
        holds=first_violation is None,
        mode=mode,
        checks=tuple(checks),
        first_violation=first_violation,
    )


# ---------------------------------------------------------------------------
# solvers


@dataclass(frozen=True)
class SgprResult:
    """status is "found" (representatives: one (set index, point) per set,
    in general position), "not_found", or "condition_violated" (violation
    carries the witnessing subfamily)."""

    status: str
    representatives: tuple | None = None
    violation: SubsetCheck | None = None

    def points(self):
        return [p for _, p in self.representatives] if self.representatives else []


def _greedy_pick_along(family, order):
    chosen = []
    for i in order:
        p = extend_gp(chosen, family.sets[i])
        if p is None:
            return None
        chosen.append(p)
    return chosen


def solve_greedy(family, exhaustive_reorder=False, node_budget=None):
    """Two-phase greedy.

    Phase 1 assigns positions m down to 1, each time taking the lowest-index
    unassigned set whose own gp_number reaches extension_bound(d, position);
    if none qualifies the greedy hypothesis fails and the unassigned
    subfamily is reported as a condition violation (its union's gp_number is
    then provably below greedy_bound). Phase 2 walks positions upward and
    extends by the first fitting point of each set; under a successful phase 1
    the extension guarantee covers every step.

    With exhaustive_reorder=True a failure is retried greedily under all m!
    set orders (m! must fit the node budget) before giving up.
    """
    m, d = family.m, family.d
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget

    def reorder_fallback(fallback):
        if not exhaustive_reorder:
            return fallback
        count = 1
        for i in range(2, m + 1):
            count *= i
            if count > budget:
                raise BudgetExceeded("m! = %d! exceeds the node budget" % m)
        for order in permutations(range(m)):
            chosen = _greedy_pick_along(family, order)
            if chosen is not None:
                reps = tuple(sorted(zip(order, chosen)))
                return SgprResult(status="found", representatives=reps)
        return fallback

    sizes = [gp_number(X) for X in family.sets]
    position_of = [None] * m
    unassigned = list(range(m))
    for j in range(m, 0, -1):
        need = extension_bound(d, j)
        pick = next((i for i in unassigned if sizes[i] >= need), None)
        if pick is None:
            indices = tuple(unassigned)
            violation = SubsetCheck(
                indices=indices,
                gp_number=family.gp_number_of_union(indices),
                required=greedy_bound(d, len(indices)),
                ok=False,
            )
            return reorder_fallback(
                SgprResult(status="condition_violated", violation=violation)
            )
        position_of[j - 1] = pick
        unassigned.remove(pick)
    chosen = _greedy_pick_along(family, position_of)
    if chosen is None:
        return reorder_fallback(SgprResult(status="not_found"))
    reps = tuple(sorted(zip(position_of, chosen)))
    return SgprResult(status="found", representatives=reps)


def solve_exhaustive(family, node_budget=None):
    """Backtracking over all picks in set order, candidates in input order,
    pruning on general position; finds the lexicographically first system or
    proves none exists. The pick-tuple space must fit the node budget."""
    budget = DEFAULT_NODE_BUDGET if node_budget is None else node_budget
    total = 1
    for X in family.sets:
        total *= len(X)
        if total > budget:
            raise BudgetExceeded(
                "exhaustive search space exceeds %d nodes" % budget
            )
    if total == 0:
        return SgprResult(status="not_found")
    m, d = family.m, family.d
    homs = []
    picks = []

    def rec(i):
        if i == m:
            return True
        for p in family.sets[i]:
            if gp_extends(homs, p.hom, d):
                homs.append(p.hom)
                picks.append(p)
                if rec(i + 1):
                    return True
                homs.pop()
                picks.pop()
        return False

    if rec(0):
        reps = tuple((i, p) for i, p in enumerate(picks))
        return SgprResult(status="found", representatives=reps)
    return SgprResult(status="not_found")


def solve_matroid_intersection(family):
    """Complete decision for m <= d+1 via the intersection of the affine
    matroid on the disjoint union with the partition matroid of the family:
    a common independent set of size m is exactly a representative system
    (m <= d+1 points are in general position iff affinely independent)."""
    m, d = family.m, family.d
    if m > d + 1:
        raise ValueError("matroid route needs m <= d+1 (got m=%d, d=%d)" % (m, d))
    points = []
    owner = []
    blocks = [[] for _ in range(m)]
    for i, X in enumerate(family.sets):
        for p in X:
            blocks[i].append(len(points))
            owner.append(i)
            points.append(p)
    affine = matroids.AffineMatroid(PointMultiset(points, d=d))
    partition = matroids.PartitionMatroid(blocks)
    common = matroids.matroid_intersection(affine, partition)
    if len(common) == m:
        reps = tuple(sorted((owner[e], points[e]) for e in common))
        return SgprResult(status="found", representatives=reps)
    return SgprResult(status="not_found")


# ---------------------------------------------------------------------------
# the insufficiency construction


def _moment_point(t, d):
    return Point([Fraction(t) ** i for i in range(1, d + 1)])


def counterexample_family(d, m, seed_param=0, retries=16):
    """Family meeting the size condition (every union of |I| sets holds |I|
    points in general position) yet admitting no representative system.

    Needs m > d+1 and d >= 2: sets 1..m-1 are singletons on the moment curve,
    and the last set places one point on each hyperplane spanned by d of the
    singletons, so any full pick contains d+1 points on one hyperplane. The
    on-hyperplane points are deterministic rational combinations steered by
    seed_param; the construction re-verifies general position of the last set
    and the size condition, shifting the parameter on failure. d = 1 is
    rejected: there a hyperplane is a single point, the last set could only
    repeat existing points, and no counterexample exists (the size condition
    is exactly the matching condition)."""
    if d < 2:
        raise ValueError("the construction needs d >= 2; at d = 1 the size condition is sharp")
    if m <= d + 1:
        raise ValueError("the size condition is sufficient for m <= d+1; need m > d+1")
    base = [_moment_point(t, d) for t in range(1, m)]
    subsets = list(combinations(range(m - 1), d))
    for attempt in range(retries):
        shift = abs(seed_param) + attempt * (len(subsets) + 2)
        extra = []
        for idx, combo in enumerate(subsets):
            c = Fraction(1, idx + 2 + shift)
            # affine combination of the d spanning points with weights
            # (1 - c - ... - c^(d-1), c, c^2, ...): lands on their hull
            weights = [c**j for j in range(1, d)]
            weights.insert(0, 1 - sum(weights))
            coords = [Fraction(0)] * d
            for w, i in zip(weights, combo):
                coords = [a + w * b for a, b in zip(coords, base[i].coords)]
            extra.append(Point(coords))
        family = PointFamily(
            d=d,
            sets=[PointMultiset([p]) for p in base] + [PointMultiset(extra, d=d)],
        )
        if not in_general_position(extra):
            continue
        report = check_condition(family, bound=lambda k: k, mode="all-subsets")
        if report.holds:
            return family
    raise ConstructionError(
        "no parameter in %d retries passed verification; rerun with a different seed_param"
        % retries
    )


# ---------------------------------------------------------------------------
# complexes of a configuration


def general_position_complex(X, max_card=None, max_faces=None):
    """Complex on one vertex per entry of X (multiplicity kept) whose faces
    are the index sets in general position, up to size max_card. Equals the
    d-th completion of the independence complex of X: general position is
    exactly 'every at-most-(d+1)-subset affinely independent'."""
    pts = X.points if isinstance(X, PointMultiset) else tuple(X)
    n = len(pts)
    if n == 0:
        return SimplicialComplex(0, [0], _validated=True)
    d = pts[0].d
    budget = DEFAULT_FACE_BUDGET if max_faces is None else max_faces
    cap = n if max_card is None else max_card
    homs = [p.hom for p in pts]
    faces = {0}
    level = [()]
    size = 1
    while level and size <= cap:
        nxt = []
        for t in level:
            start = t[-1] + 1 if t else 0
            row = [homs[i] for i in t]
            for w in range(start, n):
                if gp_extends(row, homs[w], d):
                    nxt.append(t + (w,))
                    faces.add(mask_of(t) | (1 << w))
                    if len(faces) > budget:
                        raise BudgetExceeded(
                            "general-position complex exceeds %d faces" % budget
                        )
        level = nxt
        size += 1
    return SimplicialComplex(n, faces, _validated=True)


def independence_complex(X, max_card=None):
    """Complex of affinely independent index sets of X: the (r-1)-skeleton of
    the general-position complex, where r = min(gp_number(X), d+1). Also
    accepts any independence oracle in place of a point multiset."""
    if isinstance(X, matroids.IndependenceOracle):
        return matroids.independence_complex(X, max_card=max_card)
    pts = X if isinstance(X, PointMultiset) else PointMultiset(X)
    return matroids.independence_complex(matroids.AffineMatroid(pts), max_card=max_card)
