"""Isomorphism, gluing, canonical forms, and small censuses.

The pseudomanifold fast paths all exploit the same fact: once an ordered
facet correspondence is fixed, walking the dual graph forces the rest of the
vertex identification, because crossing a shared ridge determines the image
of the opposite vertex.  determine_gluing implements that walk, iso drives it
over all ordered seed facets, and canonical_label replays it as a relabeling
from every possible start and keeps the lexicographically smallest result.

Censuses grow triangulations facet by facet: closed surfaces by repeatedly
capping the least open edge, disks by level-wise ear and corner moves.
Results are deduplicated by canonical form.
"""

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass

from .complexes import SimplicialComplex, face_tuple, _fkey
from .collapse import is_endo_collapsible
from .errors import BudgetExceededError, InvalidComplexError


def _ridge_map(complex):
    out = {}
    for F in complex.facets:
        if len(F) < 2:
            continue
        for pos in range(len(F)):
            out.setdefault(F[:pos] + F[pos + 1:], []).append(F)
    return out


@dataclass(frozen=True)
class IsoCertificate:
    """Vertex bijection witnessing an isomorphism."""

    mapping: tuple  # sorted (source, image) pairs

    def as_dict(self):
        return dict(self.mapping)

    def check(self, a, b):
        m = self.as_dict()
        if set(m) != set(a.vertices):
            return False
        if sorted(m.values(), key=repr) != sorted(b.vertices, key=repr):
            return False
        try:
            mapped = {face_tuple(m[v] for v in F) for F in a.facets}
        except InvalidComplexError:
            return False
        return mapped == set(b.facets)


def determine_gluing(a, b, seed):
    """Propagate a vertex identification from one ordered facet correspondence.

    seed is (facet_of_a, ordered_vertex_tuple_of_a_b_facet); entry i of the
    second component is the image of the i-th vertex of the first.  The walk
    crosses every ridge that is two-sided in both complexes and stops at
    ridges that are one-sided in b (that is where an overlap ends).  Returns
    the vertex mapping found, or None on any conflict.  Both complexes must be
    pure with every ridge in at most two facets.
    """
    fa, ordered = seed
    fa = face_tuple(fa)
    if fa not in a.facets:
        raise InvalidComplexError("seed %r is not a facet" % (fa,))
    ordered = tuple(ordered)
    gb = face_tuple(ordered)
    if gb not in b.facets:
        raise InvalidComplexError("seed image %r is not a facet" % (gb,))
    if len(fa) != len(ordered):
        raise InvalidComplexError("seed facets have different dimensions")
    for c, name in ((a, "first"), (b, "second")):
        if not c.dual_graph().pseudomanifold:
            raise InvalidComplexError(
                "%s complex is not a pseudomanifold" % name)

    ridges_a = _ridge_map(a)
    ridges_b = _ridge_map(b)
    mapping = dict(zip(fa, ordered))
    inverse = {w: v for v, w in mapping.items()}
    facet_image = {fa: gb}
    queue = deque([fa])
    while queue:
        F = queue.popleft()
        G = facet_image[F]
        for pos in range(len(F)):
            r = F[:pos] + F[pos + 1:]
            across = [X for X in ridges_a[r] if X != F]
            if not across:
                continue
            F2 = across[0]
            r_img = face_tuple(mapping[x] for x in r)
            others = [H for H in ridges_b.get(r_img, []) if H != G]
            if not others:
                continue  # one-sided in b: the overlap stops here
            H = others[0]
            if F2 in facet_image:
                if facet_image[F2] != H:
                    return None
                continue
            apex_a = next(x for x in F2 if x not in r)
            apex_b = next(x for x in H if x not in r_img)
            if apex_a in mapping:
                if mapping[apex_a] != apex_b:
                    return None
            elif apex_b in inverse:
                return None
            else:
                mapping[apex_a] = apex_b
                inverse[apex_b] = apex_a
            facet_image[F2] = H
            queue.append(F2)
    return mapping


def _vertex_signature(complex):
    sig = {}
    for v in complex.vertices:
        sig[v] = tuple(sorted(len(F) for F in complex.facets_containing((v,))))
    return sig


def _screens(complex):
    return (
        complex.dim,
        complex.n_vertices,
        tuple(sorted(len(F) for F in complex.facets)),
        complex.f_vector(),
        tuple(sorted(_vertex_signature(complex).values())),
    )


def _pm_fast_path_applies(a, b):
    if not (a.is_pure() and b.is_pure() and a.dim >= 1):
        return False
    dga, dgb = a.dual_graph(), b.dual_graph()
    return (dga.pseudomanifold and dgb.pseudomanifold
            and dga.connected and dgb.connected)


def iso(a, b, max_nodes=10 ** 6):
    """Isomorphism test with certificate; None when not isomorphic."""
    if _screens(a) != _screens(b):
        return None
    if a.facets == b.facets:
        return IsoCertificate(tuple(sorted(((v, v) for v in a.vertices),
                                           key=lambda p: _fkey(p))))

    if _pm_fast_path_applies(a, b):
        f0 = a.facets[0]
        for g in b.facets:
            for perm in itertools.permutations(g):
                m = determine_gluing(a, b, (f0, perm))
                if m is None or len(m) != a.n_vertices:
                    continue
                mapped = {face_tuple(m[v] for v in F) for F in a.facets}
                if mapped == set(b.facets):
                    return IsoCertificate(tuple(sorted(m.items(), key=lambda p: _fkey(p))))
        return None

    # general backtracking over signature-compatible vertex images
    sig_a = _vertex_signature(a)
    sig_b = _vertex_signature(b)
    pool = {}
    for w, s in sig_b.items():
        pool.setdefault(s, []).append(w)
    order = sorted(a.vertices, key=lambda v: (len(pool.get(sig_a[v], ())), _fkey((v,))))
    bfacets = set(b.facets)
    by_size = {}
    for F in bfacets:
        by_size.setdefault(len(F), []).append(set(F))
    assignment = {}
    used = set()
    nodes = 0

    def feasible(v):
        for F in a.facets_containing((v,)):
            img = [assignment[x] for x in F if x in assignment]
            if len(img) == len(F):
                if face_tuple(img) not in bfacets:
                    return False
            else:
                s = set(img)
                if not any(s <= cand for cand in by_size.get(len(F), ())):
                    return False
        return True

    def rec(i):
        nonlocal nodes
        if i == len(order):
            mapped = {face_tuple(assignment[v] for v in F) for F in a.facets}
            return mapped == bfacets
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError("isomorphism search exceeded %d nodes"
                                      % max_nodes, budget=max_nodes)
        v = order[i]
        for w in pool.get(sig_a[v], ()):
            if w in used:
                continue
            assignment[v] = w
            used.add(w)
            if feasible(v) and rec(i + 1):
                return True
            del assignment[v]
            used.discard(w)
        return False

    if rec(0):
        return IsoCertificate(tuple(sorted(assignment.items(), key=lambda p: _fkey(p))))
    return None


def _canon_run(facets, ridges, start, perm):
    label = {v: i for i, v in enumerate(perm)}
    nxt = len(perm)
    placed = {start}
    queue = deque([start])
    while queue:
        F = queue.popleft()
        keyed = []
        for pos in range(len(F)):
            r = F[:pos] + F[pos + 1:]
            keyed.append((tuple(sorted(label[x] for x in r)), r))
        for _, r in sorted(keyed):
            for H in ridges[r]:
                if H in placed:
                    continue
                apex = next(x for x in H if x not in r)
                if apex not in label:
                    label[apex] = nxt
                    nxt += 1
                placed.add(H)
                queue.append(H)
    if len(placed) != len(facets):
        return None, None
    shape = tuple(sorted(tuple(sorted(label[v] for v in F)) for F in facets))
    return shape, label


def canonical_label(complex, budget=10 ** 6):
    """Canonical relabeling: returns (canonical complex, mapping to new ids).

    Isomorphic complexes produce equal canonical complexes.  Connected pure
    pseudomanifolds use dual-graph walks from every ordered facet; everything
    else falls back to color refinement plus bounded within-cell search.
    """
    if not complex.facets:
        return complex, {}
    if _pm_fast_path_applies(complex, complex):
        ridges = _ridge_map(complex)
        best = None
        best_label = None
        for F in complex.facets:
            for perm in itertools.permutations(F):
                shape, label = _canon_run(complex.facets, ridges, F, perm)
                if shape is not None and (best is None or shape < best):
                    best, best_label = shape, label
        return SimplicialComplex(best), best_label

    # color refinement on the "shares a face" graph
    sig = _vertex_signature(complex)
    color = {v: sig[v] for v in complex.vertices}
    nbrs = {v: set() for v in complex.vertices}
    for F in complex.facets:
        for v in F:
            nbrs[v].update(x for x in F if x != v)
    for _ in range(len(complex.vertices)):
        new = {v: (color[v], tuple(sorted(color[u] for u in nbrs[v])))
               for v in complex.vertices}
        ranks = {c: i for i, c in enumerate(sorted(set(new.values())))}
        new = {v: ranks[new[v]] for v in new}
        if len(set(new.values())) == len(set(color.values())):
            color = new
            break
        color = new
    cells = {}
    for v in complex.vertices:
        cells.setdefault(color[v], []).append(v)
    ordered_cells = [sorted(cells[c], key=lambda v: _fkey((v,)))
                     for c in sorted(cells)]
    total = 1
    for cell in ordered_cells:
        total *= math.factorial(len(cell))
        if total > budget:
            raise BudgetExceededError(
                "canonical labeling needs %d relabelings (budget %d)"
                % (total, budget), requested=total, budget=budget)
    offsets = []
    base = 0
    for cell in ordered_cells:
        offsets.append(base)
        base += len(cell)
    best = None
    best_label = None
    for perms in itertools.product(*(itertools.permutations(cell)
                                     for cell in ordered_cells)):
        label = {}
        for cell_perm, off in zip(perms, offsets):
            for i, v in enumerate(cell_perm):
                label[v] = off + i
        shape = tuple(sorted(tuple(sorted(label[v] for v in F))
                             for F in complex.facets))
        if best is None or shape < best:
            best, best_label = shape, label
    return SimplicialComplex(best), best_label


# -- censuses ----------------------------------------------------------------


def enumerate_surfaces(n_vertices):
    """All connected closed triangulated surfaces on exactly n vertices, up to
    isomorphism.

    Grows triangle sets from a fixed seeded edge, always capping the least
    open edge, introducing fresh vertices in discovery order; completed
    candidates are filtered through classify_surface and deduplicated.
    """
    if n_vertices < 4:
        return []
    if n_vertices > 10:
        raise BudgetExceededError("surface census capped at 10 vertices",
                                  requested=n_vertices, budget=10)
    seed = frozenset({(0, 1, 2), (0, 1, 3)})
    out = {}
    memo = set()
    stack = [seed]
    while stack:
        tris = stack.pop()
        if tris in memo:
            continue
        memo.add(tris)
        counts = Counter()
        used = set()
        for t in tris:
            used.update(t)
            for e in itertools.combinations(t, 2):
                counts[e] += 1
        open_edges = sorted(e for e, c in counts.items() if c == 1)
        if not open_edges:
            if len(used) != n_vertices:
                continue
            cand = SimplicialComplex(tris)
            sc = cand.classify_surface()
            if sc.kind == "closed-surface":
                key, _ = canonical_label(cand)
                out.setdefault(key.facets, key)
            continue
        va, vb = open_edges[0]
        options = sorted(used - {va, vb})
        if len(used) < n_vertices:
            options.append(max(used) + 1)
        for w in options:
            t = face_tuple((va, vb, w))
            if t in tris:
                continue
            if counts.get(face_tuple((va, w)), 0) >= 2:
                continue
            if counts.get(face_tuple((vb, w)), 0) >= 2:
                continue
            stack.append(tris | {t})
    return [out[k] for k in sorted(out)]


def enumerate_disks(max_triangles):
    """Triangulated disks with up to the given number of triangles, up to
    isomorphism, keyed by triangle count.

    Level t+1 comes from level t by two boundary moves: an ear over one
    boundary edge using a fresh vertex, and a corner fill over two consecutive
    boundary edges whose endpoints are not yet joined by an edge.
    """
    if max_triangles < 1:
        return {}
    if max_triangles > 12:
        raise BudgetExceededError("disk census capped at 12 triangles",
                                  requested=max_triangles, budget=12)
    levels = {1: [SimplicialComplex([(0, 1, 2)])]}
    for t in range(1, max_triangles):
        nxt = {}
        for disk in levels[t]:
            edge_count = Counter()
            for F in disk.facets:
                for e in itertools.combinations(F, 2):
                    edge_count[e] += 1
            boundary = [e for e, c in edge_count.items() if c == 1]
            fresh = max(disk.vertices) + 1
            grown = []
            for (x, y) in boundary:
                grown.append(disk.facets + (face_tuple((x, y, fresh)),))
            at_vertex = {}
            for (x, y) in boundary:
                at_vertex.setdefault(x, []).append(y)
                at_vertex.setdefault(y, []).append(x)
            for w, ends in at_vertex.items():
                if len(ends) != 2:
                    continue
                u, v = ends
                if face_tuple((u, v)) in edge_count:
                    continue
                grown.append(disk.facets + (face_tuple((u, v, w)),))
            for facets in grown:
                cand = SimplicialComplex(facets)
                key, _ = canonical_label(cand)
                nxt.setdefault(key.facets, key)
        levels[t + 1] = [nxt[k] for k in sorted(nxt)]
    return levels


# -- counting bounds and the census table ------------------------------------


def manifold_count_bound(d, n_facets):
    """Upper bound 2^(d^2 N) for the number of d-manifold triangulation types
    with N facets."""
    return 2 ** (d * d * n_facets)


def derived_count_bound(d, n_facets):
    """Upper bound 2^(d^2 (d+1)! N) used when passing to derived subdivisions."""
    return 2 ** (d * d * math.factorial(d + 1) * n_facets)


@dataclass(frozen=True)
class CensusRow:
    n_vertices: int
    orientable: bool
    genus: int  # handle count when orientable, cross-cap count otherwise
    count: int
    endo: str  # aggregated endo-collapsibility verdict over the class
    min_facets: int
    bound: int


def census(max_vertices, seeds=16, max_nodes=10 ** 5):
    """Census table of closed surfaces by vertex count and topological type."""
    rows = []
    for n in range(4, max_vertices + 1):
        groups = {}
        for s in enumerate_surfaces(n):
            sc = s.classify_surface()
            genus = sc.genus if sc.orientable else sc.cross_caps
            groups.setdefault((sc.orientable, genus), []).append(s)
        for (orientable, genus), members in sorted(groups.items()):
            verdicts = set()
            for m in members:
                res = is_endo_collapsible(m, strategy="auto", seeds=seeds,
                                          max_nodes=max_nodes)
                verdicts.add(res.verdict)
            if verdicts <= {"yes"}:
                endo = "yes"
            elif "no" in verdicts:
                endo = "no"
            else:
                endo = "unknown"
            min_facets = min(len(m.facets) for m in members)
            rows.append(CensusRow(
                n_vertices=n, orientable=orientable, genus=genus,
                count=len(members), endo=endo, min_facets=min_facets,
                bound=manifold_count_bound(2, min_facets)))
    return rows


def check_bounds(members, d=2):
    """Group complexes by facet count N and compare against 2^(d^2 N)."""
    by_n = Counter(len(m.facets) for m in members)
    out = []
    for n_facets in sorted(by_n):
        bound = manifold_count_bound(d, n_facets)
        out.append((n_facets, by_n[n_facets], bound, by_n[n_facets] <= bound))
    return out
