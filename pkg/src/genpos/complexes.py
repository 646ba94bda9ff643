"""Finite simplicial complexes on vertex set {0, ..., n-1}.

Faces are stored explicitly as an immutable set of integer bitmasks, closed
downward, containing the empty face whenever the complex has any face at all.
dim is (largest face size - 1), or -1 for the complex with no faces. The
completion operator fills in every set all of whose small subsets are already
faces; it is the bridge between local independence data and global topology.

Enumerating operators accept face budgets and cardinality caps so that large
completions can be built only up to the sizes a truncated homology computation
needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from genpos.errors import BudgetExceeded

__all__ = [
    "SimplicialComplex",
    "DEFAULT_FACE_BUDGET",
    "closure",
    "star",
    "neighborhood",
    "completion",
    "induced",
    "skeleton",
    "join",
    "nerve",
    "is_q_star",
    "QStarResult",
    "find_colorful_face",
]

DEFAULT_FACE_BUDGET = 1 << 20


def mask_of(vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class SimplicialComplex:
    """Immutable simplicial complex; equality is face-set equality."""

    __slots__ = ("n_vertices", "faces", "_by_size")

    def __init__(self, n_vertices, faces, _validated=False):
        if n_vertices < 0:
            raise ValueError("n_vertices must be nonnegative")
        fs = frozenset(faces)
        limit = 1 << n_vertices
        if not _validated:
            for f in fs:
                if not 0 <= f < limit:
                    raise ValueError("face %r out of vertex range" % (bits_of(f),))
                for v in bits_of(f):
                    if f ^ (1 << v) not in fs:
                        raise ValueError(
                            "faces are not closed downward: %r lacks subset"
                            % (bits_of(f),)
                        )
        self.n_vertices = n_vertices
        self.faces = fs
        self._by_size = None

    @classmethod
    def from_faces(cls, n_vertices, faces):
        """Build from faces given as vertex iterables, validating closure."""
        return cls(n_vertices, {mask_of(f) for f in faces})

    @property
    def dim(self):
        if not self.faces:
            return -1
        return max(f.bit_count() for f in self.faces) - 1

    def by_size(self, s):
        """Faces of size s, sorted lexicographically as vertex tuples."""
        if self._by_size is None:
            table = {}
            for f in self.faces:
                table.setdefault(f.bit_count(), []).append(f)
            for fs in table.values():
                fs.sort(key=lambda m: tuple(bits_of(m)))
            self._by_size = table
        return self._by_size.get(s, [])

    def has_face(self, vertices):
        return mask_of(vertices) in self.faces

    def vertices(self):
        """Vertices actually present, i.e. v with {v} a face."""
        return [v for v in range(self.n_vertices) if (1 << v) in self.faces]

    def facets(self):
        """Maximal faces as masks."""
        out = []
        for f in self.faces:
            cof = False
            for v in range(self.n_vertices):
                if not f & (1 << v) and (f | (1 << v)) in self.faces:
                    cof = True
                    break
            if not cof:
                out.append(f)
        out.sort(key=lambda m: tuple(bits_of(m)))
        return out

    def f_vector(self):
        """Face counts by dimension: entry i counts faces of size i+1."""
        counts = [0] * (self.dim + 1 if self.faces else 0)
        for f in self.faces:
            if f:
                counts[f.bit_count() - 1] += 1
        return tuple(counts)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.n_vertices == other.n_vertices
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.n_vertices, self.faces))

    def __contains__(self, vertices):
        if isinstance(vertices, int):
            return vertices in self.faces
        return self.has_face(vertices)

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return "SimplicialComplex(n=%d, dim=%d, %d faces)" % (
            self.n_vertices,
            self.dim,
            len(self.faces),
        )


def closure(facets, n_vertices, max_faces=None):
    """Downward closure of the given facets (vertex iterables or masks)."""
    budget = DEFAULT_FACE_BUDGET if max_faces is None else max_faces
    limit = 1 << n_vertices
    faces = set()
    for facet in facets:
        f = facet if isinstance(facet, int) else mask_of(facet)
        if not 0 <= f < limit:
            raise ValueError("facet %r out of vertex range" % (facet,))
        sub = f
        while True:
            faces.add(sub)
            if len(faces) > budget:
                raise BudgetExceeded("closure exceeds %d faces" % budget)
            if sub == 0:
                break
            sub = (sub - 1) & f
    return SimplicialComplex(n_vertices, faces, _validated=True)


def star(K, v):
    """Star of v: all S with S + {v} a face. Nonempty iff {v} is a face;
    contains every face through v as well as the links."""
    if not 0 <= v < K.n_vertices:
        raise ValueError("vertex %d out of range" % v)
    vb = 1 << v
    faces = {f for f in K.faces if (f | vb) in K.faces}
    return SimplicialComplex(K.n_vertices, faces, _validated=True)


def neighborhood(K, v, d):
    """Neighborhood complex of v in a d-dimensional K: the star of v plus
    every d-dimensional face S avoiding v whose proper subsets all lie in the
    star. d must equal dim K (passed explicitly as a guard)."""
    if d != K.dim:
        raise ValueError("neighborhood needs d == dim K (%d != %d)" % (d, K.dim))
    if not 0 <= v < K.n_vertices:
        raise ValueError("vertex %d out of range" % v)
    vb = 1 << v
    st = {f for f in K.faces if (f | vb) in K.faces}
    result = set(st)
    for f in K.by_size(d + 1):
        if f & vb:
            continue
        if d == 0 or all((f ^ (1 << u)) in st for u in bits_of(f)):
            result.add(f)
    if result:
        result.add(0)
    return SimplicialComplex(K.n_vertices, result, _validated=True)


def completion(K, j, max_card=None, max_faces=None):
    """j-th completion: K plus every set S with |S| >= j+2 all of whose
    subsets of size <= j+1 are faces of K, truncated to |S| <= max_card
    (default: no truncation beyond n_vertices). Requires j >= dim K; the
    completion of the empty complex is empty, and j > dim K returns K."""
    if j < K.dim:
        raise ValueError("completion needs j >= dim K (%d < %d)" % (j, K.dim))
    n = K.n_vertices
    cap = n if max_card is None else max_card
    budget = DEFAULT_FACE_BUDGET if max_faces is None else max_faces
    faces = {f for f in K.faces if f.bit_count() <= cap}
    if not K.faces or j > K.dim:
        return SimplicialComplex(n, faces, _validated=True)
    # Grow level by level: a set qualifies iff all its one-smaller subsets
    # qualify (or are faces of K, at the base level j+2).
    base = {}
    for f in K.by_size(j + 1):
        top = f.bit_length() - 1
        for w in range(top + 1, n):
            cand = f | (1 << w)
            if cand in base:
                continue
            if all((cand ^ (1 << u)) in K.faces for u in bits_of(cand)):
                base[cand] = True
    level = set(base)
    size = j + 2
    while level and size <= cap:
        faces.update(level)
        if len(faces) > budget:
            raise BudgetExceeded("completion exceeds %d faces" % budget)
        nxt = set()
        for f in level:
            top = f.bit_length() - 1
            for w in range(top + 1, n):
                cand = f | (1 << w)
                if cand in nxt:
                    continue
                if all((cand ^ (1 << u)) in level for u in bits_of(cand)):
                    nxt.add(cand)
        level = nxt
        size += 1
    return SimplicialComplex(n, faces, _validated=True)


def induced(K, W):
    """Subcomplex induced on a vertex subset W (iterable or mask)."""
    wm = W if isinstance(W, int) else mask_of(W)
    faces = {f for f in K.faces if f & ~wm == 0}
    return SimplicialComplex(K.n_vertices, faces, _validated=True)


def skeleton(K, s):
    """s-skeleton: faces of dimension at most s (s >= -1)."""
    if s < -1:
        raise ValueError("skeleton needs s >= -1")
    faces = {f for f in K.faces if f.bit_count() <= s + 1}
    return SimplicialComplex(K.n_vertices, faces, _validated=True)


def join(K, L, max_faces=None):
    """Simplicial join; L's vertices are relabeled after K's."""
    budget = DEFAULT_FACE_BUDGET if max_faces is None else max_faces
    if len(K.faces) * len(L.faces) > budget:
        raise BudgetExceeded("join exceeds %d faces" % budget)
    shift = K.n_vertices
    faces = {a | (b << shift) for a in K.faces for b in L.faces}
    return SimplicialComplex(K.n_vertices + L.n_vertices, faces, _validated=True)


def nerve(family):
    """Nerve of a family of complexes on one vertex universe: a subset of
    members is a face iff their face sets share a nonempty face, which by
    downward closure means a shared vertex. Every member must have a vertex."""
    members = list(family)
    if not members:
        return SimplicialComplex(0, [], _validated=True)
    n = members[0].n_vertices
    for K in members:
        if K.n_vertices != n:
            raise ValueError("nerve members must share one vertex universe")
    vsets = []
    for K in members:
        vs = mask_of(K.vertices())
        if vs == 0:
            raise ValueError("nerve members must each contain a vertex")
        vsets.append(vs)
    m = len(members)
    faces = {0}

    def rec(start, face, common):
        for i in range(start, m):
            nv = common & vsets[i]
            if nv:
                faces.add(face | (1 << i))
                rec(i + 1, face | (1 << i), nv)

    rec(0, 0, (1 << n) - 1 if n else 0)
    return SimplicialComplex(m, faces, _validated=True)


@dataclass(frozen=True)
class QStarResult:
    """Outcome of the q-star test. ``violating`` is a q-set with no common
    extender (None when the failure is having too few vertices);
    ``extenders`` maps each q-set to the chosen witness vertex on success."""

    holds: bool
    q: int
    violating: tuple | None = None
    extenders: dict | None = None

    def __bool__(self):
        return self.holds


def is_q_star(K, q):
    """q-star property of K (dimension taken from K): more than q vertices,
    and every q-set Y of vertices has a vertex v outside Y such that S + {v}
    is a face for every face S of K[Y] with |S| <= dim K (the empty face
    included, so v itself must be a vertex)."""
    if q < 1:
        raise ValueError("q must be at least 1")
    verts = K.vertices()
    if len(verts) <= q:
        return QStarResult(holds=False, q=q)
    d = K.dim
    small = [f for f in K.faces if f.bit_count() <= d]
    extenders = {}
    for combo in combinations(verts, q):
        ym = mask_of(combo)
        local = [f for f in small if f & ~ym == 0]
        found = None
        for v in verts:
            vb = 1 << v
            if vb & ym:
                continue
            if all((f | vb) in K.faces for f in local):
                found = v
                break
        if found is None:
            return QStarResult(holds=False, q=q, violating=combo)
        extenders[combo] = found
    return QStarResult(holds=True, q=q, extenders=extenders)


def find_colorful_face(K, blocks):
    """First face (lexicographic) meeting each block of a vertex partition
    exactly once, returned as a vertex tuple, or None. Blocks must be
    disjoint; vertices outside every block are simply never used."""
    masks = [mask_of(b) for b in blocks]
    seen = 0
    for bm in masks:
        if bm & seen:
            raise ValueError("blocks must be disjoint")
        seen |= bm

    def rec(i, face):
        if i == len(masks):
            return face
        for v in bits_of(masks[i]):
            cand = face | (1 << v)
            if cand in K.faces:
                got = rec(i + 1, cand)
                if got is not None:
                    return got
        return None

    if 0 not in K.faces:
        return None
    got = rec(0, 0)
    return None if got is None else tuple(bits_of(got))
