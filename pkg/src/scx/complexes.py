"""Core simplicial complex type and elementary constructions.

A complex is determined by its facet list.  Faces are stored as tuples of
vertex labels sorted by a universal key, so int, str and tuple labels can
coexist; tuple labels show up once subdivisions start naming vertices by the
faces they subdivide.  Queries that need lower faces expand the downward
closure on demand and memoize it.
"""

import itertools
import warnings
from dataclasses import dataclass

from .errors import InvalidComplexError


def _vkey(v):
    """Total order on vertex labels across types: ints, then strs, then tuples."""
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(_vkey(x) for x in v))
    raise InvalidComplexError("unsupported vertex label %r" % (v,))


def _fkey(face):
    return tuple(_vkey(v) for v in face)


def face_tuple(vertices):
    """Canonical face representation: tuple of distinct labels in universal order."""
    vs = tuple(sorted(vertices, key=_vkey))
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise InvalidComplexError("repeated vertex %r in face %r" % (a, vs))
    return vs


def _maximal(faces):
    """Maximal elements of a family of faces, longest first."""
    by_len = {}
    for f in set(faces):
        by_len.setdefault(len(f), []).append(f)
    out = []
    for n in sorted(by_len, reverse=True):
        for f in by_len[n]:
            fs = set(f)
            if not any(fs < set(g) for g in out):
                out.append(f)
    return out


@dataclass(frozen=True)
class DualGraph:
    """Facet adjacency structure: facets in canonical order, neighbors by index."""

    facets: tuple
    adjacency: tuple
    pseudomanifold: bool
    connected: bool


@dataclass(frozen=True)
class SurfaceClass:
    """Outcome of classify_surface.

    kind is one of "closed-surface", "surface-with-boundary", "not-a-surface".
    genus counts handles of an orientable surface, cross_caps counts cross-caps
    of a non-orientable one; the other slot stays None.
    """

    kind: str
    euler_characteristic: int
    orientable: bool = None
    genus: int = None
    cross_caps: int = None
    boundary_components: int = 0


class SimplicialComplex:
    """Immutable simplicial complex given by its facets (maximal faces).

    The empty complex (no facets) is allowed; use new_complex to reject it.
    Dominated would-be facets are dropped with a warning, exact duplicates
    silently.
    """

    __slots__ = ("facets", "_faces", "_by_dim")

    def __init__(self, facets=()):
        cleaned = {face_tuple(f) for f in facets}
        if any(len(f) == 0 for f in cleaned):
            raise InvalidComplexError("the empty face cannot be listed as a facet")
        if len({len(f) for f in cleaned}) > 1:
            keep = []
            for f in cleaned:
                fs = set(f)
                if any(len(g) > len(f) and fs < set(g) for g in cleaned):
                    warnings.warn("dropping dominated facet %r" % (f,))
                else:
                    keep.append(f)
        else:
            keep = cleaned
        self.facets = tuple(sorted(keep, key=_fkey))
        self._faces = None
        self._by_dim = None

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self):
        return max((len(F) for F in self.facets), default=0) - 1

    @property
    def vertices(self):
        vs = set()
        for F in self.facets:
            vs.update(F)
        return tuple(sorted(vs, key=_vkey))

    @property
    def n_vertices(self):
        return len(self.vertices)

    def faces(self, dim=None):
        """All nonempty faces as a frozenset, or just those of one dimension."""
        if self._faces is None:
            allf = set()
            for F in self.facets:
                for k in range(1, len(F) + 1):
                    allf.update(itertools.combinations(F, k))
            self._faces = frozenset(allf)
        if dim is None:
            return self._faces
        if self._by_dim is None:
            bd = {}
            for f in self._faces:
                bd.setdefault(len(f) - 1, []).append(f)
            self._by_dim = {k: frozenset(v) for k, v in bd.items()}
        return self._by_dim.get(dim, frozenset())

    def has_face(self, sigma):
        return face_tuple(sigma) in self.faces()

    def __contains__(self, sigma):
        return self.has_face(sigma)

    def f_vector(self):
        return tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def euler_characteristic(self):
        return sum((-1) ** k * len(self.faces(k)) for k in range(self.dim + 1))

    def is_pure(self):
        return len({len(F) for F in self.facets}) <= 1

    def facets_containing(self, sigma):
        ss = set(face_tuple(sigma))
        return tuple(F for F in self.facets if ss <= set(F))

    # -- local and global constructions ----------------------------------

    def link(self, sigma):
        s = face_tuple(sigma)
        if not self.has_face(s):
            raise InvalidComplexError("%r is not a face" % (s,))
        ss = set(s)
        lk = []
        for F in self.facets:
            if ss <= set(F):
                rest = tuple(v for v in F if v not in ss)
                if rest:
                    lk.append(rest)
        return SimplicialComplex(lk)

    def star(self, sigma):
        """Closed star: the closure of every facet containing sigma."""
        fs = self.facets_containing(sigma)
        if not fs:
            raise InvalidComplexError("%r is not a face" % (face_tuple(sigma),))
        return SimplicialComplex(fs)

    def deletion(self, other):
        """Subcomplex of faces containing no facet of `other` (complex or single face)."""
        if isinstance(other, SimplicialComplex):
            forb = [set(F) for F in other.facets]
        else:
            forb = [set(face_tuple(other))]
        keep = [f for f in self.faces() if not any(b <= set(f) for b in forb)]
        return SimplicialComplex(_maximal(keep))

    def induced(self, vertices):
        """Full subcomplex on a vertex subset."""
        vs = set(vertices)
        inter = {tuple(v for v in F if v in vs) for F in self.facets}
        inter.discard(())
        return SimplicialComplex(_maximal(inter))

    def join(self, other):
        """Simplicial join; vertex label collisions force a dense int relabeling."""
        if set(self.vertices) & set(other.vertices):
            a = {v: i for i, v in enumerate(self.vertices)}
            b = {v: i + len(a) for i, v in enumerate(other.vertices)}
            return self.relabel(a).join(other.relabel(b))
        return SimplicialComplex(
            face_tuple(F + G) for F in self.facets for G in other.facets
        )

    def cone(self, apex=None):
        """Join with a fresh apex vertex (an unused int label unless given)."""
        if apex is None:
            ints = [v for v in self.vertices if isinstance(v, int)]
            apex = max(ints) + 1 if ints else 0
        if any(apex in F for F in self.facets):
            raise InvalidComplexError("apex %r is already a vertex" % (apex,))
        if not self.facets:
            return SimplicialComplex([(apex,)])
        return SimplicialComplex(face_tuple(F + (apex,)) for F in self.facets)

    def boundary(self):
        """Closure of the ridges lying in exactly one facet (pure complexes only)."""
        if not self.is_pure():
            raise InvalidComplexError("boundary needs a pure complex")
        if self.dim <= 0:
            return SimplicialComplex()
        count = {}
        for F in self.facets:
            for r in itertools.combinations(F, len(F) - 1):
                count[r] = count.get(r, 0) + 1
        return SimplicialComplex(r for r, c in count.items() if c == 1)

    # -- relabelings ------------------------------------------------------

    def relabel(self, mapping):
        vs = self.vertices
        img = set()
        for v in vs:
            if v not in mapping:
                raise InvalidComplexError("no image for vertex %r" % (v,))
            img.add(mapping[v])
        if len(img) != len(vs):
            raise InvalidComplexError("relabeling is not injective")
        return SimplicialComplex(
            tuple(mapping[v] for v in F) for F in self.facets
        )

    def normalize(self):
        """Relabel vertices to 0..n-1 following the universal label order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    # -- connectivity and duality ----------------------------------------

    def is_connected(self):
        if not self.facets:
            return True
        seen = {self.facets[0][0]}
        queue = [self.facets[0][0]]
        adj = {}
        for F in self.facets:
            for v in F:
                adj.setdefault(v, set()).update(F)
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n_vertices

    def connected_components(self):
        """Split into vertex-connected pieces, each a complex."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for F in self.facets:
            a = find(F[0])
            for v in F[1:]:
                parent[find(v)] = a
        groups = {}
        for F in self.facets:
            groups.setdefault(find(F[0]), []).append(F)
        return [SimplicialComplex(fs) for _, fs in sorted(groups.items(), key=lambda kv: _vkey(kv[0]))]

    def dual_graph(self):
        """Facet adjacency across shared ridges.

        pseudomanifold means pure, nonempty and every ridge in at most two
        facets; ridges only count for facets of dimension >= 1.
        """
        fs = self.facets
        ridge_map = {}
        for i, F in enumerate(fs):
            if len(F) < 2:
                continue
            for r in itertools.combinations(F, len(F) - 1):
                ridge_map.setdefault(r, []).append(i)
        adj = [set() for _ in fs]
        pm = self.is_pure() and bool(fs)
        for r, idxs in ridge_map.items():
            if len(idxs) > 2:
                pm = False
            for a, b in itertools.combinations(idxs, 2):
                adj[a].add(b)
                adj[b].add(a)
        connected = True
        if fs:
            seen = {0}
            queue = [0]
            while queue:
                i = queue.pop()
                for j in adj[i]:
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
            connected = len(seen) == len(fs)
        return DualGraph(
            facets=fs,
            adjacency=tuple(tuple(sorted(s)) for s in adj),
            pseudomanifold=pm,
            connected=connected,
        )

    def orientation(self):
        """Compatible facet signs, or None when no such assignment exists.

        Needs a pure complex in which every ridge lies in at most two facets.
        Each connected piece of the dual graph is oriented from its first facet.
        """
        if not self.is_pure():
            raise InvalidComplexError("orientation needs a pure complex")
        fs = self.facets
        ridge_map = {}
        for i, F in enumerate(fs):
            if len(F) < 2:
                return {F: 1 for F in fs}
            for pos in range(len(F)):
                r = F[:pos] + F[pos + 1:]
                ridge_map.setdefault(r, []).append((i, pos))
        pairs = []
        for r, ends in ridge_map.items():
            if len(ends) > 2:
                return None
            if len(ends) == 2:
                pairs.append(ends)
        adj = {i: [] for i in range(len(fs))}
        for (i, pi), (j, pj) in pairs:
            # compatible iff induced ridge orientations cancel
            rel = -((-1) ** (pi + pj))
            adj[i].append((j, rel))
            adj[j].append((i, rel))
        sign = {}
        for start in range(len(fs)):
            if start in sign:
                continue
            sign[start] = 1
            queue = [start]
            while queue:
                i = queue.pop()
                for j, rel in adj[i]:
                    want = sign[i] * rel
                    if j not in sign:
                        sign[j] = want
                        queue.append(j)
                    elif sign[j] != want:
                        return None
        return {fs[i]: s for i, s in sign.items()}

    # -- surface recognition ----------------------------------------------

    def classify_surface(self):
        """Decide whether this is a connected triangulated surface and which one.

        Disconnected complexes report not-a-surface.
        """
        chi = self.euler_characteristic()

        def fail():
            return SurfaceClass(kind="not-a-surface", euler_characteristic=chi)

        if not self.facets or self.dim != 2 or not self.is_pure():
            return fail()
        if not self.is_connected():
            return fail()
        for e in self.faces(1):
            if len(self.facets_containing(e)) > 2:
                return fail()
        closed = True
        for v in self.faces(0):
            lk = self.link(v)
            if lk.dim != 1 or not lk.is_connected():
                return fail()
            degs = {}
            for a, b in lk.facets:
                degs[a] = degs.get(a, 0) + 1
                degs[b] = degs.get(b, 0) + 1
            if len(degs) != lk.n_vertices:
                return fail()
            degset = sorted(degs.values())
            if all(d == 2 for d in degset):
                pass  # single cycle: interior vertex
            elif degset.count(1) == 2 and set(degset) <= {1, 2}:
                closed = False  # single path: boundary vertex
            else:
                return fail()
        orient = self.orientation()
        orientable = orient is not None
        if closed:
            if orientable:
                return SurfaceClass(
                    kind="closed-surface", euler_characteristic=chi,
                    orientable=True, genus=(2 - chi) // 2,
                )
            return SurfaceClass(
                kind="closed-surface", euler_characteristic=chi,
                orientable=False, cross_caps=2 - chi,
            )
        b = len(self.boundary().connected_components())
        if orientable:
            return SurfaceClass(
                kind="surface-with-boundary", euler_characteristic=chi,
                orientable=True, genus=(2 - chi - b) // 2, boundary_components=b,
            )
        return SurfaceClass(
            kind="surface-with-boundary", euler_characteristic=chi,
            orientable=False, cross_caps=2 - chi - b, boundary_components=b,
        )

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return "SimplicialComplex(dim=%d, n_facets=%d, n_vertices=%d)" % (
            self.dim, len(self.facets), self.n_vertices,
        )


def new_complex(facets):
    """Build a complex from facets, rejecting empty input."""
    fs = list(facets)
    if not fs:
        raise InvalidComplexError("a complex needs at least one facet")
    return SimplicialComplex(fs)


def full_simplex(d):
    """The solid d-simplex on vertices 0..d."""
    if d < 0:
        raise InvalidComplexError("dimension must be >= 0")
    return SimplicialComplex([tuple(range(d + 1))])


def simplex_boundary(d):
    """Boundary sphere of the d-simplex: all d-subsets of 0..d."""
    if d < 1:
        raise InvalidComplexError("dimension must be >= 1")
    return SimplicialComplex(itertools.combinations(range(d + 1), d))


def octahedron():
    """Boundary of the 3-dimensional cross-polytope; antipodal pairs (0,1),(2,3),(4,5)."""
    return SimplicialComplex(
        (a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)
    )
