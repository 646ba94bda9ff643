"""Acceptance suite. One test per shipped claim; each prints a single
[PASS]/[FAIL] line with its runtime against the stated limit (run with -s to
see them all). Random data comes from fixed string seeds, so a failure here
reproduces as-is."""

import time
from itertools import combinations
from math import comb

import pytest

from conftest import (
    oracle_gp,
    oracle_max_uniform_size,
    random_complex,
    random_degenerate_points,
    random_gp_points,
    rng_for,
)

from genpos import (
    AffineMatroid,
    PartitionMatroid,
    Point,
    PointFamily,
    PointMultiset,
    SimplicialComplex,
    UniformMatroid,
    betti_up_to,
    check_condition,
    closure,
    completion,
    connectivity_bound,
    counterexample_family,
    extend_gp,
    extension_bound,
    general_position_complex,
    gp_number,
    greedy_bound,
    in_general_position,
    independence_complex,
    is_homologically_k_connected,
    is_q_star,
    join,
    max_uniform_size,
    neighborhood,
    solve_exhaustive,
    solve_greedy,
    solve_matroid_intersection,
    star,
    uniformity_complex,
)


def report(num, name, t0, limit, failures):
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < limit
    print("[%s] %02d %s: %.2fs (limit %ds)"
          % ("PASS" if ok else "FAIL", num, name, elapsed, limit))
    assert not failures, failures[:5]
    assert elapsed < limit, "%.2fs over the %ds limit" % (elapsed, limit)


def curve_points(d, ts):
    # distinct parameters give points in general position in dimension d
    return [Point([t ** (e + 1) for e in range(d)]) for t in ts]


def test_c01_bound_tables():
    t0 = time.perf_counter()
    failures = []
    for d in (1, 2, 3):
        for k in range(1, 11):
            a_ref = k if k <= d + 1 else d * comb(k - 1, d) + 1
            b_ref = k * (a_ref - 1) + 1
            if extension_bound(d, k) != a_ref:
                failures.append(("A", d, k, extension_bound(d, k), a_ref))
            if greedy_bound(d, k) != b_ref:
                failures.append(("B", d, k, greedy_bound(d, k), b_ref))
    if extension_bound(2, 4) != 7 or greedy_bound(2, 4) != 25:
        failures.append(("spot", extension_bound(2, 4), greedy_bound(2, 4)))
    for k in range(-1, 11):
        if connectivity_bound(1, k) != k + 2:
            failures.append(("g", 1, k, connectivity_bound(1, k)))
    report(1, "bound-tables", t0, 1, failures)


def test_c02_extension_guarantee():
    t0 = time.perf_counter()
    rng = rng_for("accept-extension")
    failures = []
    for trial in range(500):
        d = trial % 3 + 1
        k = rng.randint(1, 6)
        s_size = rng.choice((k - 1, k - 1, max(0, k - 2)))
        S = random_gp_points(rng, d, s_size)
        T = random_gp_points(rng, d, extension_bound(d, k) + rng.randint(0, 2),
                             spread=90)
        t = extend_gp(S, T)
        if t is None or not oracle_gp(S + [t]):
            failures.append((d, k, s_size, t))
    report(2, "extension-guarantee", t0, 30, failures)


def test_c03_greedy_end_to_end():
    t0 = time.perf_counter()
    rng = rng_for("accept-greedy")
    failures = []
    for trial in range(100):
        m = rng.choice((1, 2, 2, 3, 3, 4, 4, 4))
        pool = curve_points(2, rng.sample(range(-60, 60),
                                          greedy_bound(2, m) + rng.randint(0, 3)))
        sets = []
        for _ in range(m):
            extra = curve_points(2, rng.sample(range(60, 90), rng.randint(0, 2)))
            sets.append(PointMultiset(pool + extra, d=2))
        family = PointFamily(d=2, sets=sets)
        if not check_condition(family, lambda kk: greedy_bound(2, kk)).holds:
            failures.append(("condition", trial, m))
            continue
        res = solve_greedy(family)
        if res.status != "found" or not in_general_position(res.points()):
            failures.append(("solve", trial, m, res.status))
    report(3, "greedy-end-to-end", t0, 120, failures)


def test_c04_insufficiency_witnesses():
    t0 = time.perf_counter()
    failures = []
    for m in (4, 5):
        family = counterexample_family(2, m)
        rep = check_condition(family, lambda kk: kk)
        if not rep.holds or len(rep.checks) != 2 ** m - 1:
            failures.append((m, "condition", rep.holds, len(rep.checks)))
        if solve_exhaustive(family).status != "not_found":
            failures.append((m, "solved anyway"))
    report(4, "insufficiency-witnesses", t0, 60, failures)


def test_c05_matroid_route():
    t0 = time.perf_counter()
    rng = rng_for("accept-matroid-route")
    failures = []
    kept = attempts = 0
    while kept < 200 and attempts < 5000:
        attempts += 1
        d = rng.randint(1, 3)
        m = rng.randint(1, d + 1)
        sets = []
        for _ in range(m):
            size = rng.randint(1, 4)
            if rng.random() < 0.5:
                pts = random_degenerate_points(rng, d, size)
            else:
                pts = random_gp_points(rng, d, size, spread=12)
            sets.append(PointMultiset(pts, d=d))
        family = PointFamily(d=d, sets=sets)
        if not check_condition(family, lambda kk: kk).holds:
            continue
        kept += 1
        res = solve_matroid_intersection(family)
        ref = solve_exhaustive(family)
        if res.status != "found" or ref.status != "found":
            failures.append((d, m, res.status, ref.status))
        elif not oracle_gp(res.points()):
            failures.append((d, m, "bad representatives"))
    if kept < 200:
        failures.append(("only %d instances generated" % kept,))
    report(5, "matroid-route", t0, 60, failures)


def test_c06_completion_identities():
    t0 = time.perf_counter()
    rng = rng_for("accept-identities")
    failures = []
    pool = []
    while len(pool) < 300:
        n = rng.randint(3, 9)
        K = random_complex(rng, n, rng.randint(0, 3),
                           density=rng.uniform(0.3, 0.8))
        if K.dim >= 0 and K.vertices():
            pool.append(K)
    for i in range(0, 300, 2):
        K1, K2 = pool[i], pool[i + 1]
        n = max(K1.n_vertices, K2.n_vertices)
        K1 = SimplicialComplex(n, K1.faces)
        K2 = SimplicialComplex(n, K2.faces)
        j = max(K1.dim, K2.dim)
        meet = SimplicialComplex(n, K1.faces & K2.faces)
        lhs = completion(meet, j, max_card=n)
        rhs = SimplicialComplex(n, completion(K1, j, max_card=n).faces
                                & completion(K2, j, max_card=n).faces)
        if lhs.faces != rhs.faces:
            failures.append(("intersection", i))
    for i, K in enumerate(pool):
        d = K.dim
        v = rng.choice(K.vertices())
        lhs = star(completion(K, d, max_card=K.n_vertices), v)
        rhs = completion(neighborhood(K, v, d), d, max_card=K.n_vertices)
        if lhs.faces != rhs.faces:
            failures.append(("star", i, v))
    report(6, "completion-identities", t0, 120, failures)


def _random_graph_complex(rng, n, p, universal=0):
    facets = [(v,) for v in range(n)]
    for a, b in combinations(range(n), 2):
        if a < universal or b < universal or rng.random() < p:
            facets.append((a, b))
    return closure(facets, n)


def _clique_filled_complex(rng, n, p, universal):
    adj = [[False] * n for _ in range(n)]
    facets = [(v,) for v in range(n)]
    for a, b in combinations(range(n), 2):
        if a < universal or b < universal or rng.random() < p:
            adj[a][b] = adj[b][a] = True
            facets.append((a, b))
    for a, b, c in combinations(range(n), 3):
        if adj[a][b] and adj[a][c] and adj[b][c]:
            facets.append((a, b, c))
    return closure(facets, n)


def test_c07_star_property_connectivity():
    t0 = time.perf_counter()
    rng = rng_for("accept-star-connectivity")
    failures = []
    jobs = [
        (0, 40, lambda: _random_graph_complex(rng, 10, 0.55), 1),
        (0, 20, lambda: _clique_filled_complex(rng, 10, 0.6, universal=1), 2),
        (1, 40, lambda: _clique_filled_complex(rng, 10, 0.7, universal=2), 2),
    ]
    for k, want, make, dim in jobs:
        q = 2 * k + 2
        kept = tries = 0
        while kept < want:
            tries += 1
            if tries > 5000:
                failures.append(("generator stalled", k, dim, kept))
                break
            K = make()
            if K.dim != dim or not is_q_star(K, q).holds:
                continue
            kept += 1
            if not is_homologically_k_connected(completion(K, dim), k):
                failures.append((k, dim, sorted(K.facets())))
    report(7, "star-property-connectivity", t0, 300, failures)


def test_c08_representative_bound_path():
    t0 = time.perf_counter()
    rng = rng_for("accept-bound-path")
    failures = []
    for d, k, trials in ((1, 0, 10), (1, 1, 10), (1, 2, 10), (1, 3, 10),
                         (2, 0, 15), (2, 1, 10)):
        q = 2 * k + 2
        need = d * comb(q, d) + 1
        for _ in range(trials):
            core = curve_points(d, rng.sample(range(-40, 40), need))
            pts = list(core)
            for _ in range(rng.randint(1, 3)):
                pts.append(rng.choice(core))
            if d == 2 and rng.random() < 0.5:
                a, b = rng.sample(core, 2)
                mid = Point([(ca + cb) / 2 for ca, cb in
                             zip(a.coords, b.coords)])
                pts.append(mid)
            rng.shuffle(pts)
            X = PointMultiset(pts, d=d)
            if gp_number(X) <= d * comb(q, d):
                failures.append(("construction", d, k))
                continue
            if not is_q_star(independence_complex(X), q).holds:
                failures.append(("q-star", d, k))
            G = general_position_complex(X, max_card=k + 2)
            prof = betti_up_to(G, k)
            if any(prof.betti):
                failures.append(("betti", d, k, prof.betti))
    report(8, "representative-bound-path", t0, 600, failures)


def test_c09_join_profiles():
    t0 = time.perf_counter()
    failures = []

    def discrete(m):
        return closure([(v,) for v in range(m)], m)

    def joined(sizes):
        K = discrete(sizes[0])
        for m in sizes[1:]:
            K = join(K, discrete(m))
        return K

    for sizes in ((2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 2, 3), (2, 3, 3),
                  (3, 3, 3)):
        n = len(sizes)
        top = 1
        for m in sizes:
            top *= m - 1
        prof = betti_up_to(joined(sizes), n - 1)
        want = (0,) * (n - 1) + (top,)
        if prof.betti != want:
            failures.append((sizes, prof.betti, want))
    for sizes in ((1, 2), (1, 3), (2, 1, 3), (3, 3, 1), (1, 1)):
        K = joined(sizes)
        prof = betti_up_to(K, K.dim)
        if any(prof.betti):
            failures.append((sizes, prof.betti, "contractible"))
    report(9, "join-profiles", t0, 30, failures)


def test_c10_independence_complex_connectivity():
    t0 = time.perf_counter()
    rng = rng_for("accept-ic-connectivity")
    failures = []
    matroids = []
    for _ in range(50):
        d = rng.randint(1, 3)
        n = rng.randint(1, 9)
        if rng.random() < 0.5:
            pts = random_degenerate_points(rng, d, n)
        else:
            pts = random_gp_points(rng, d, n, spread=15)
        matroids.append(AffineMatroid(pts, d=d))
    for _ in range(50):
        n = rng.randint(1, 9)
        matroids.append(UniformMatroid(n, rng.randint(1, min(4, n))))
    for i, m in enumerate(matroids):
        r = m.full_rank
        K = independence_complex(m)
        if not is_homologically_k_connected(K, r - 2):
            failures.append((i, r, betti_up_to(K, max(r - 2, 0)).betti))
    report(10, "independence-complex-connectivity", t0, 120, failures)


def test_c11_uniformity_identities():
    t0 = time.perf_counter()
    rng = rng_for("accept-uniformity")
    failures = []
    matroids = []
    for _ in range(15):
        d = rng.randint(1, 3)
        n = rng.randint(1, 9)
        pts = random_degenerate_points(rng, d, n)
        matroids.append(AffineMatroid(pts, d=d))
    for _ in range(15):
        n = rng.randint(1, 9)
        matroids.append(UniformMatroid(n, rng.randint(1, n)))
    for _ in range(15):
        n = rng.randint(1, 9)
        order = list(range(n))
        rng.shuffle(order)
        blocks, at = [], 0
        while at < n:
            step = rng.randint(1, n - at)
            blocks.append(order[at:at + step])
            at += step
        matroids.append(PartitionMatroid(blocks))
    for i, m in enumerate(matroids):
        n, r = m.ground_size, m.full_rank
        lhs = uniformity_complex(m, max_card=n)
        rhs = completion(independence_complex(m), r - 1, max_card=n)
        if lhs.faces != rhs.faces:
            failures.append((i, "faces"))
        if max_uniform_size(m) != oracle_max_uniform_size(m):
            failures.append((i, "mu", max_uniform_size(m)))
    report(11, "uniformity-identities", t0, 60, failures)
