"""Command-line interface.

Subcommands: solve, check, complex, counterexample, witness-search, bounds.
Input documents are JSON (see jsonio); "-" or omission reads stdin. Output is
machine JSON unless --human is given.

Exit codes: 0 positive answer (system found, condition holds, property holds,
or plain report produced); 1 negative answer (no system, condition violated,
property fails, no witness found); 2 solver stopped because the size
condition itself is violated; 3 bad input, bad arguments, or exceeded budget.

Environment: GENPOS_BUDGET_FACES caps faces in any constructed complex,
GENPOS_BUDGET_NODES caps search nodes and enumerated subfamilies.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from genpos import homology, jsonio, matroids, solver
from genpos import __version__
from genpos.complexes import (
    completion,
    induced,
    is_q_star,
    join,
    neighborhood,
    nerve,
    skeleton,
    star,
)
from genpos.errors import DocumentError, GenposError
from genpos.geometry import gp_number

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_CONDITION = 2
EXIT_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse uses exit code 2 for usage errors, which this CLI reserves
    # for a violated size condition; remap usage errors to 3
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "%s: error: %s\n" % (self.prog, message))


def _env_budget(name):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise DocumentError("%s must be an integer, got %r" % (name, raw)) from None
    if value <= 0:
        raise DocumentError("%s must be positive" % name)
    return value


def _read_doc(path):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DocumentError("cannot read %s: %s" % (path, exc)) from None
    return jsonio.load_doc(text)


def _emit(doc, human, render):
    if human:
        print(render(doc))
    else:
        print(json.dumps(doc))


def _int_list(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1) if not part.startswith("-") else (part, "")
            if hi == "":
                raise argparse.ArgumentTypeError("bad range %r" % part)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def build_parser():
    top = _Parser(prog="genpos", description=__doc__.splitlines()[0])
    top.add_argument("--version", action="version", version="genpos %s" % __version__)
    sub = top.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("solve", help="find a general-position representative system")
    p.add_argument("input", nargs="?", default="-", help="family JSON file or - for stdin")
    p.add_argument(
        "--method",
        choices=("auto", "greedy", "exhaustive", "matroid"),
        default="auto",
        help="auto = matroid when m <= d+1, else exhaustive within budget, else greedy",
    )
    p.add_argument(
        "--exhaustive-reorder",
        action="store_true",
        help="greedy only: retry all set orders before reporting failure",
    )
    p.add_argument("--human", action="store_true")

    p = sub.add_parser("check", help="check a size condition on all subfamily unions")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument(
        "--bound",
        choices=("hall", "greedy", "g"),
        default="g",
        help="hall: |I|; greedy: the two-phase threshold; "
        "g: the connectivity-route threshold (default)",
    )
    p.add_argument("--mode", choices=("all-subsets", "sampled"), default="all-subsets")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--all-checks", action="store_true", help="include every check in the output")
    p.add_argument("--human", action="store_true")

    p = sub.add_parser("complex", help="build complexes and apply operations")
    p.add_argument(
        "op",
        choices=(
            "gp", "independence", "uniformity", "closure", "star", "neighborhood",
            "completion", "skeleton", "induced", "join", "nerve", "betti", "qstar",
        ),
    )
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-v", "--vertex", type=int, help="vertex for star/neighborhood")
    p.add_argument("-j", "--level", type=int, help="completion level")
    p.add_argument("-s", "--skeleton-dim", type=int, help="skeleton dimension")
    p.add_argument("-k", "--up-to", type=int, help="betti: top degree")
    p.add_argument("-q", "--q", type=int, help="qstar: the q to test")
    p.add_argument("--vertices", type=_int_list, help="induced: vertex list like 0,2,5")
    p.add_argument("--with", dest="second", metavar="FILE", help="join: the other complex")
    p.add_argument("--max-card", type=int, help="cap face size during construction")
    p.add_argument("--rank", type=int, help="uniformity: matroid rank override")
    p.add_argument("--mod-prime", type=int, help="betti: rank arithmetic modulo this prime")
    p.add_argument("--human", action="store_true")

    p = sub.add_parser(
        "counterexample",
        help="family meeting the size condition with no representative system",
    )
    p.add_argument("-d", type=int, required=True, help="dimension, at least 2")
    p.add_argument("-m", type=int, required=True, help="number of sets, at least d+2")
    p.add_argument("--seed-param", type=int, default=0)
    p.add_argument("--human", action="store_true")

    p = sub.add_parser(
        "witness-search",
        help="random search for a condition-satisfying family with no system",
    )
    p.add_argument("-d", type=int, default=2)
    p.add_argument("-m", type=int, default=4)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coord-range", type=int, default=3, help="coordinates drawn from [-R, R]")
    p.add_argument("--max-set-size", type=int, default=3)
    p.add_argument("--human", action="store_true")

    p = sub.add_parser("bounds", help="tabulate all bounds over d and k ranges")
    p.add_argument("--d", type=_int_list, default=[1, 2, 3], help="list like 1,2,3 or 1-3")
    p.add_argument("--k", type=_int_list, default=[1, 2, 3, 4, 5], help="list or range")
    p.add_argument("--human", action="store_true")

    return top


# ---------------------------------------------------------------------------
# subcommand bodies


def _render_solve(doc):
    lines = ["status: %s" % doc["status"]]
    for rep in doc.get("representatives", []):
        lines.append("  set %d -> (%s)" % (rep["set"], ", ".join(map(str, rep["point"]))))
    if "violation" in doc:
        v = doc["violation"]
        lines.append(
            "  violated on sets %s: gp_number %d < required %d"
            % (v["indices"], v["gp_number"], v["required"])
        )
    return "\n".join(lines)


def _cmd_solve(args, node_budget):
    family = jsonio.family_from_doc(_read_doc(args.input))
    method = args.method
    if method == "auto":
        if family.m <= family.d + 1:
            method = "matroid"
        else:
            total = 1
            for X in family.sets:
                total *= len(X)
            budget = solver.DEFAULT_NODE_BUDGET if node_budget is None else node_budget
            method = "exhaustive" if total <= budget else "greedy"
    if method == "matroid":
        result = solver.solve_matroid_intersection(family)
    elif method == "exhaustive":
        result = solver.solve_exhaustive(family, node_budget=node_budget)
    else:
        result = solver.solve_greedy(
            family,
            exhaustive_reorder=args.exhaustive_reorder,
            node_budget=node_budget,
        )
    doc = jsonio.result_to_doc(result)
    doc["method"] = method
    _emit(doc, args.human, _render_solve)
    if result.status == "found":
        return EXIT_OK
    if result.status == "condition_violated":
        return EXIT_CONDITION
    return EXIT_NEGATIVE


_BOUND_FORMS = {
    "hall": lambda d: (lambda k: k),
    "greedy": lambda d: (lambda k: solver.greedy_bound(d, k)),
    "g": lambda d: (lambda k: solver.representative_bound(d, k)),
}


def _render_check(doc):
    lines = ["holds" if doc["holds"] else "violated"]
    if "first_violation" in doc:
        v = doc["first_violation"]
        lines.append(
            "  sets %s: gp_number %d < required %d"
            % (v["indices"], v["gp_number"], v["required"])
        )
    lines.append("  checked %d subfamilies (%s)" % (doc["n_checks"], doc["mode"]))
    return "\n".join(lines)


def _cmd_check(args, node_budget):
    family = jsonio.family_from_doc(_read_doc(args.input))
    bound = _BOUND_FORMS[args.bound](family.d)
    rng = random.Random(args.seed) if args.mode == "sampled" else None
    report = solver.check_condition(
        family,
        bound,
        mode=args.mode,
        samples=args.samples,
        rng=rng,
        subset_budget=node_budget,
    )
    doc = jsonio.report_to_doc(report, include_checks=args.all_checks)
    doc["bound"] = args.bound
    _emit(doc, args.human, _render_check)
    return EXIT_OK if report.holds else EXIT_NEGATIVE


def _render_complex(doc):
    if "betti" in doc:
        return "betti (reduced, through degree %d): %s\neuler (partial): %d" % (
            doc["up_to"],
            doc["betti"],
            doc["euler_partial"],
        )
    if "holds" in doc:
        lines = ["q-star: %s (q = %d)" % ("holds" if doc["holds"] else "fails", doc["q"])]
        if doc.get("violating") is not None:
            lines.append("  violating vertex set: %s" % (doc["violating"],))
        return "\n".join(lines)
    return "n_vertices %d, dim %d, %d faces, facets: %s" % (
        doc["n_vertices"],
        doc["dim"],
        doc["n_faces"],
        doc["facets"],
    )


def _cmd_complex(args, face_budget, node_budget):
    op = args.op

    def need(flag, name):
        if flag is None:
            raise DocumentError("complex %s needs %s" % (op, name))
        return flag

    if op in ("gp", "independence", "uniformity"):
        pts = jsonio.points_from_doc(_read_doc(args.input))
        if op == "gp":
            K = solver.general_position_complex(
                pts, max_card=args.max_card, max_faces=face_budget
            )
        elif op == "independence":
            K = solver.independence_complex(pts, max_card=args.max_card)
        else:
            oracle = matroids.AffineMatroid(pts)
            if args.rank is not None:
                oracle = matroids.ExplicitMatroid(
                    len(pts),
                    [
                        frozenset(S)
                        for S in _independent_sets_up_to(oracle, args.rank)
                    ],
                )
            K = matroids.uniformity_complex(oracle, max_card=args.max_card)
    elif op == "nerve":
        members = jsonio.subcomplexes_from_doc(_read_doc(args.input), max_faces=face_budget)
        K = nerve(members)
    else:
        K = jsonio.complex_from_doc(_read_doc(args.input), max_faces=face_budget)
        if op == "closure":
            pass
        elif op == "star":
            K = star(K, need(args.vertex, "-v"))
        elif op == "neighborhood":
            K = neighborhood(K, need(args.vertex, "-v"), K.dim)
        elif op == "completion":
            K = completion(K, need(args.level, "-j"), max_card=args.max_card,
                           max_faces=face_budget)
        elif op == "skeleton":
            K = skeleton(K, need(args.skeleton_dim, "-s"))
        elif op == "induced":
            K = induced(K, need(args.vertices, "--vertices"))
        elif op == "join":
            other = jsonio.complex_from_doc(
                _read_doc(need(args.second, "--with")), max_faces=face_budget
            )
            K = join(K, other, max_faces=face_budget)
        elif op == "betti":
            profile = homology.betti_up_to(
                K, need(args.up_to, "-k"), mod_prime=args.mod_prime,
                max_faces=face_budget,
            )
            doc = {
                "up_to": profile.up_to,
                "betti": list(profile.betti),
                "euler_partial": profile.euler_partial,
                "f_vector": list(profile.f_vector),
            }
            _emit(doc, args.human, _render_complex)
            return EXIT_OK
        elif op == "qstar":
            res = is_q_star(K, need(args.q, "-q"))
            doc = {
                "holds": res.holds,
                "q": res.q,
                "violating": None if res.violating is None else sorted(res.violating),
            }
            _emit(doc, args.human, _render_complex)
            return EXIT_OK if res.holds else EXIT_NEGATIVE
    _emit(jsonio.complex_to_doc(K), args.human, _render_complex)
    return EXIT_OK


def _independent_sets_up_to(oracle, r):
    # every independent set of size <= r, grown levelwise
    out = [frozenset()]
    level = [frozenset()]
    for _ in range(r):
        nxt = []
        for S in level:
            start = max(S) + 1 if S else 0
            for e in range(start, oracle.ground_size):
                T = S | {e}
                if oracle.is_independent(T):
                    nxt.append(T)
        out.extend(nxt)
        level = nxt
    return out


def _render_family(doc):
    lines = ["d = %d, %d sets" % (doc["d"], len(doc["sets"]))]
    for i, X in enumerate(doc["sets"]):
        lines.append("  X_%d: %s" % (i + 1, " ".join("(%s)" % ", ".join(map(str, p)) for p in X)))
    return "\n".join(lines)


def _cmd_counterexample(args):
    family = solver.counterexample_family(args.d, args.m, seed_param=args.seed_param)
    _emit(jsonio.family_to_doc(family), args.human, _render_family)
    return EXIT_OK


def _cmd_witness_search(args, node_budget):
    if args.d < 1 or args.m < 1:
        raise DocumentError("witness-search needs d >= 1 and m >= 1")
    rng = random.Random(args.seed)
    R = args.coord_range
    for _ in range(args.trials):
        sets = []
        for _ in range(args.m):
            size = rng.randint(1, args.max_set_size)
            sets.append(
                [[rng.randint(-R, R) for _ in range(args.d)] for _ in range(size)]
            )
        family = jsonio.family_from_doc({"d": args.d, "sets": sets})
        report = solver.check_condition(
            family, lambda k: k, subset_budget=node_budget, stop_early=True
        )
        if not report.holds:
            continue
        result = solver.solve_exhaustive(family, node_budget=node_budget)
        if result.status == "not_found":
            doc = jsonio.family_to_doc(family)
            doc["gp_numbers"] = [gp_number(X) for X in family.sets]
            _emit(doc, args.human, _render_family)
            return EXIT_OK
    print(json.dumps({"found": False, "trials": args.trials}))
    return EXIT_NEGATIVE


def _render_bounds(doc):
    header = "%4s %4s %10s %12s %12s %12s %4s %12s" % (
        "d", "k", "A", "B", "g_upper", "f_upper", "r", "h_upper"
    )
    lines = [header]
    for row in doc["rows"]:
        lines.append(
            "%4d %4d %10d %12d %12d %12d %4d %12d"
            % (
                row["d"], row["k"], row["A"], row["B"], row["g_upper"],
                row["f_upper"], row["r"], row["h_upper"],
            )
        )
    return "\n".join(lines)


def _cmd_bounds(args):
    table = solver.bound_table(args.d, args.k)
    _emit({"rows": list(table.rows)}, args.human, _render_bounds)
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    face_budget = _env_budget("GENPOS_BUDGET_FACES")
    node_budget = _env_budget("GENPOS_BUDGET_NODES")
    if args.command == "solve":
        return _cmd_solve(args, node_budget)
    if args.command == "check":
        return _cmd_check(args, node_budget)
    if args.command == "complex":
        return _cmd_complex(args, face_budget, node_budget)
    if args.command == "counterexample":
        return _cmd_counterexample(args)
    if args.command == "witness-search":
        return _cmd_witness_search(args, node_budget)
    return _cmd_bounds(args)


def entry(argv=None):
    try:
        code = main(argv)
    except (GenposError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        code = EXIT_ERROR
    raise SystemExit(code)
