"""JSON documents for point families, complexes, and solver results.

Rational coordinates travel as JSON integers or as strings such as "3/4" or
"-0.25" (decimal strings are exact). JSON floats are rejected outright:
0.1 as a binary double is not the rational 1/10, and silently accepting it
would poison every exact computation downstream.

Family document:     {"d": 2, "sets": [[["1/2", 0], [3, 4]], ...]}
Complex document:    {"n_vertices": 5, "facets": [[0, 1, 2], [3], ...]}
Subcomplex family:   {"n_vertices": 5, "members": [[[0, 1], [2]], ...]}
                     (one facet list per member, all on one vertex universe)
"""

from __future__ import annotations

import json
from fractions import Fraction

from genpos.complexes import SimplicialComplex, bits_of, closure
from genpos.errors import DocumentError
from genpos.geometry import Point, PointMultiset
from genpos.solver import PointFamily

__all__ = [
    "parse_rational",
    "dump_rational",
    "load_doc",
    "family_from_doc",
    "family_to_doc",
    "points_from_doc",
    "complex_from_doc",
    "complex_to_doc",
    "subcomplexes_from_doc",
    "result_to_doc",
    "report_to_doc",
]


def parse_rational(obj):
    if isinstance(obj, bool):
        raise DocumentError("booleans are not coordinates: %r" % (obj,))
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        raise DocumentError(
            "JSON floats are inexact; write %r as a string like \"1/10\"" % (obj,)
        )
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError("cannot parse rational %r: %s" % (obj, exc)) from None
    raise DocumentError("expected a rational, got %r" % (obj,))


def dump_rational(q):
    q = Fraction(q)
    return int(q) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def load_doc(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("invalid JSON: %s" % exc) from None
    if not isinstance(doc, dict):
        raise DocumentError("top-level document must be a JSON object")
    return doc


def _require(doc, key, kind, what):
    if key not in doc:
        raise DocumentError("%s document is missing %r" % (what, key))
    val = doc[key]
    if kind is int and isinstance(val, bool) or not isinstance(val, kind):
        raise DocumentError("%s %r must be a %s" % (what, key, kind.__name__))
    return val


def _point_from_doc(coords, d, where):
    if not isinstance(coords, list):
        raise DocumentError("%s: point must be a list of coordinates" % where)
    if len(coords) != d:
        raise DocumentError(
            "%s: point has %d coordinates, dimension is %d" % (where, len(coords), d)
        )
    try:
        return Point([parse_rational(c) for c in coords])
    except DocumentError as exc:
        raise DocumentError("%s: %s" % (where, exc)) from None


def points_from_doc(doc):
    """Parse {"d": ..., "points": [[...], ...]} into a PointMultiset."""
    d = _require(doc, "d", int, "points")
    if d < 1:
        raise DocumentError("dimension must be at least 1")
    raw = _require(doc, "points", list, "points")
    pts = [_point_from_doc(c, d, "points[%d]" % i) for i, c in enumerate(raw)]
    return PointMultiset(pts, d=d)


def family_from_doc(doc):
    d = _require(doc, "d", int, "family")
    if d < 1:
        raise DocumentError("dimension must be at least 1")
    raw = _require(doc, "sets", list, "family")
    if not raw:
        raise DocumentError("family has no sets")
    sets = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, list):
            raise DocumentError("sets[%d] must be a list of points" % i)
        pts = [
            _point_from_doc(c, d, "sets[%d][%d]" % (i, j)) for j, c in enumerate(entry)
        ]
        sets.append(PointMultiset(pts, d=d))
    return PointFamily(d=d, sets=sets)


def family_to_doc(family):
    return {
        "d": family.d,
        "sets": [
            [[dump_rational(c) for c in p.coords] for p in X] for X in family.sets
        ],
    }


def complex_from_doc(doc, max_faces=None):
    n = _require(doc, "n_vertices", int, "complex")
    if n < 0:
        raise DocumentError("n_vertices must be nonnegative")
    raw = _require(doc, "facets", list, "complex")
    facets = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in entry
        ):
            raise DocumentError("facets[%d] must be a list of vertex indices" % i)
        if any(not 0 <= v < n for v in entry):
            raise DocumentError("facets[%d] has a vertex outside 0..%d" % (i, n - 1))
        if len(set(entry)) != len(entry):
            raise DocumentError("facets[%d] repeats a vertex" % i)
        facets.append(tuple(entry))
    return closure(facets, n, max_faces=max_faces)


def complex_to_doc(K):
    facets = sorted((tuple(bits_of(f)) for f in K.facets()), key=lambda t: (len(t), t))
    return {
        "n_vertices": K.n_vertices,
        "dim": K.dim,
        "n_faces": len(K.faces),
        "facets": [list(f) for f in facets],
    }


def subcomplexes_from_doc(doc, max_faces=None):
    """Parse {"n_vertices": ..., "members": [facet-list, ...]} into a list of
    complexes on one shared vertex universe (the nerve input shape)."""
    n = _require(doc, "n_vertices", int, "subcomplex family")
    if n < 0:
        raise DocumentError("n_vertices must be nonnegative")
    raw = _require(doc, "members", list, "subcomplex family")
    if not raw:
        raise DocumentError("subcomplex family has no members")
    members = []
    for i, facet_list in enumerate(raw):
        if not isinstance(facet_list, list):
            raise DocumentError("members[%d] must be a list of facets" % i)
        members.append(
            complex_from_doc(
                {"n_vertices": n, "facets": facet_list}, max_faces=max_faces
            )
        )
    return members


def result_to_doc(result):
    doc = {"status": result.status}
    if result.representatives is not None:
        doc["representatives"] = [
            {"set": i, "point": [dump_rational(c) for c in p.coords]}
            for i, p in result.representatives
        ]
    if result.violation is not None:
        doc["violation"] = _check_to_doc(result.violation)
    return doc


def _check_to_doc(check):
    return {
        "indices": list(check.indices),
        "gp_number": check.gp_number,
        "required": check.required,
        "ok": check.ok,
    }


def report_to_doc(report, include_checks=False):
    doc = {
        "holds": report.holds,
        "mode": report.mode,
        "n_checks": len(report.checks),
    }
    if report.first_violation is not None:
        doc["first_violation"] = _check_to_doc(report.first_violation)
    if include_checks:
        doc["checks"] = [_check_to_doc(c) for c in report.checks]
    return doc
