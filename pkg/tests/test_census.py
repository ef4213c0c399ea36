"""Gluing, isomorphism, canonical forms, censuses, and counting bounds.

Expected census values are derived here by independent means: sphere counts
from an edge-flip walk over triangulations (starting at a stacked sphere),
disk counts from a raw filter over all small triangle sets, and isomorphism
answers from a plain vertex-permutation backtracker.
"""

import itertools
from collections import Counter

import pytest

from scx import BudgetExceededError, InvalidComplexError, SimplicialComplex, octahedron, simplex_boundary
from scx.census import (
    canonical_label,
    census,
    check_bounds,
    derived_count_bound,
    determine_gluing,
    enumerate_disks,
    enumerate_surfaces,
    iso,
    manifold_count_bound,
)

from conftest import random_complex, random_pure_complex


# -- independent oracles -----------------------------------------------------


def brute_iso(a_facets, b_facets):
    """Backtracking vertex-bijection search on plain facet sets (ints only)."""
    fa = {tuple(sorted(F)) for F in a_facets}
    fb = {tuple(sorted(F)) for F in b_facets}
    va = sorted({v for F in fa for v in F})
    vb = sorted({v for F in fb for v in F})
    if len(va) != len(vb) or len(fa) != len(fb):
        return None
    if sorted(map(len, fa)) != sorted(map(len, fb)):
        return None
    siga = {v: sorted(len(F) for F in fa if v in F) for v in va}
    sigb = {w: sorted(len(F) for F in fb if w in F) for w in vb}
    m = {}
    used = set()

    def rec(i):
        if i == len(va):
            return {tuple(sorted(m[x] for x in F)) for F in fa} == fb
        v = va[i]
        for w in vb:
            if w in used or sigb[w] != siga[v]:
                continue
            m[v] = w
            used.add(w)
            ok = True
            for F in fa:
                if v in F and all(x in m for x in F):
                    if tuple(sorted(m[x] for x in F)) not in fb:
                        ok = False
                        break
            if ok and rec(i + 1):
                return True
            del m[v]
            used.discard(w)
        return False

    return dict(m) if rec(0) else None


def _tri(xs):
    return tuple(sorted(xs))


def stacked_sphere(n):
    tris = {(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)}
    for v in range(4, n):
        f = min(tris)
        tris.remove(f)
        a, b, c = f
        tris |= {_tri((a, b, v)), _tri((a, c, v)), _tri((b, c, v))}
    return frozenset(tris)


def flip_canon(tris):
    """Canonical shape: minimum over degree-class-respecting relabelings."""
    verts = sorted({v for t in tris for v in t})
    deg = Counter(v for t in tris for v in t)
    cells = {}
    for v in verts:
        cells.setdefault(deg[v], []).append(v)
    ordered = [cells[d] for d in sorted(cells)]
    offsets = []
    base = 0
    for cell in ordered:
        offsets.append(base)
        base += len(cell)
    best = None
    for perms in itertools.product(*map(itertools.permutations, ordered)):
        label = {}
        for cell_perm, off in zip(perms, offsets):
            for i, v in enumerate(cell_perm):
                label[v] = off + i
        shape = tuple(sorted(_tri(label[v] for v in t) for t in tris))
        if best is None or shape < best:
            best = shape
    return best


def flip_neighbors(tris):
    edge_map = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            edge_map.setdefault(e, []).append(t)
    out = []
    for e, ts in edge_map.items():
        if len(ts) != 2:
            continue
        a, b = e
        x = next(v for v in ts[0] if v not in e)
        y = next(v for v in ts[1] if v not in e)
        if x == y or _tri((x, y)) in edge_map:
            continue
        out.append(frozenset(set(tris) - set(ts)
                             | {_tri((a, x, y)), _tri((b, x, y))}))
    return out


def flip_sphere_types(n):
    """All n-vertex sphere triangulation types via edge-flip closure."""
    start = flip_canon(stacked_sphere(n))
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop()
        for nb in flip_neighbors(set(cur)):
            c = flip_canon(nb)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def raw_disk_types(t):
    """All t-triangle disk types by filtering every triangle set on t+2 labels."""
    labels = range(t + 2)
    found = {}
    for tris in itertools.combinations(itertools.combinations(labels, 3), t):
        edge_count = Counter()
        for f in tris:
            for e in itertools.combinations(f, 2):
                edge_count[e] += 1
        if any(c > 2 for c in edge_count.values()):
            continue
        chi_faces = len({v for f in tris for v in f}) - len(edge_count) + t
        if chi_faces != 1:
            continue
        c = SimplicialComplex(tris)
        sc = c.classify_surface()
        if (sc.kind, sc.orientable, sc.genus, sc.boundary_components) != (
                "surface-with-boundary", True, 0, 1):
            continue
        found[flip_canon(tris)] = True
    return len(found)


# -- gluing and isomorphism ---------------------------------------------------


def test_determine_gluing_recovers_identity_and_relabelings():
    o = octahedron()
    f0 = o.facets[0]
    assert determine_gluing(o, o, (f0, f0)) == {v: v for v in o.vertices}

    phi = {v: v + 10 for v in o.vertices}
    r = o.relabel(phi)
    m = determine_gluing(o, r, (f0, tuple(phi[v] for v in f0)))
    assert m == phi


def test_determine_gluing_partial_overlap_stops_cleanly():
    o = octahedron()
    phi = {v: chr(ord("a") + v) for v in o.vertices}
    a = SimplicialComplex(o.facets[:6])
    b = SimplicialComplex(o.facets[2:]).relabel(phi)
    seed_facet = o.facets[3]
    m = determine_gluing(a, b, (seed_facet, tuple(phi[v] for v in seed_facet)))
    assert m is not None
    assert all(phi[v] == w for v, w in m.items())
    assert set(seed_facet) <= set(m)


def test_determine_gluing_detects_conflicts():
    def cycle(n):
        return SimplicialComplex([(i, (i + 1) % n) for i in range(n)])

    # wrapping a 4-cycle around a 5-cycle pins vertex 0 to two images
    assert determine_gluing(cycle(4), cycle(5), ((0, 1), (0, 1))) is None
    # and a 5-cycle around a 4-cycle reuses an image vertex
    assert determine_gluing(cycle(5), cycle(4), ((0, 1), (0, 1))) is None


def test_determine_gluing_validates_input():
    o = octahedron()
    with pytest.raises(InvalidComplexError):
        determine_gluing(o, o, ((0, 1, 2), o.facets[0]))
    book = SimplicialComplex([(0, 1, 2), (0, 1, 3), (0, 1, 4)])
    with pytest.raises(InvalidComplexError):
        determine_gluing(book, book, ((0, 1, 2), (0, 1, 2)))


def test_iso_on_known_pairs():
    s = simplex_boundary(3)
    phi = {v: "v%d" % v for v in s.vertices}
    cert = iso(s, s.relabel(phi))
    assert cert is not None and cert.check(s, s.relabel(phi))
    assert iso(s, octahedron()) is None

    cert = iso(s, s)
    assert cert is not None and cert.check(s, s)


def test_iso_agrees_with_brute_force():
    import random as _random
    rng = _random.Random(99)
    for trial in range(30):
        if trial % 2:
            a = random_pure_complex(trial, n_vertices=7, dim=2, n_facets=5)
        else:
            a = random_complex(trial, n_vertices=7, max_dim=3, n_samples=5)
        perm = list(range(12))
        rng.shuffle(perm)
        b = a.relabel({v: perm[v] for v in a.vertices})
        if trial % 3 == 0:
            # tamper: drop one facet and its vertices may vanish with it
            b = SimplicialComplex(b.facets[1:]) if len(b.facets) > 1 else b
        got = iso(a, b)
        want = brute_iso(a.facets, b.facets)
        assert (got is None) == (want is None), (a.facets, b.facets)
        if got is not None:
            assert got.check(a, b)


def test_canonical_label_is_iso_invariant():
    for seed in range(8):
        a = random_pure_complex(seed, n_vertices=7, dim=2, n_facets=6)
        phi = {v: v * 3 + 1 for v in a.vertices}
        b = a.relabel(phi)
        ca, ma = canonical_label(a)
        cb, mb = canonical_label(b)
        assert ca == cb
        assert a.relabel(ma) == ca

    x = SimplicialComplex([(0, 1), (1, 2), (0, 2), (3,)])
    y = SimplicialComplex([(5, 6), (6, 7), (5, 7), (0,)])
    assert canonical_label(x)[0] == canonical_label(y)[0]


def test_canonical_label_budget():
    scatter = SimplicialComplex([(i,) for i in range(12)])
    with pytest.raises(BudgetExceededError):
        canonical_label(scatter, budget=1000)


# -- censuses -----------------------------------------------------------------


def test_sphere_counts_match_flip_oracle():
    want = {n: len(flip_sphere_types(n)) for n in (4, 5, 6, 7)}
    for n in (4, 5, 6, 7):
        spheres = [s for s in enumerate_surfaces(n)
                   if s.classify_surface().genus == 0
                   and s.classify_surface().orientable]
        assert len(spheres) == want[n], n
    assert want == {4: 1, 5: 1, 6: 2, 7: 5}


def test_surface_census_known_anchors():
    assert len(enumerate_surfaces(4)) == 1
    six = enumerate_surfaces(6)
    rp2 = [s for s in six if not s.classify_surface().orientable]
    assert len(rp2) == 1 and rp2[0].classify_surface().cross_caps == 1

    seven = enumerate_surfaces(7)
    tori = [s for s in seven
            if s.classify_surface().orientable and s.classify_surface().genus == 1]
    assert len(tori) == 1  # the 7-vertex torus
    assert len(tori[0].facets) == 14
    # no 7-vertex closed surface with two cross-caps exists
    assert not any((not s.classify_surface().orientable
                    and s.classify_surface().cross_caps == 2) for s in seven)


def test_disk_counts_match_raw_oracle():
    levels = enumerate_disks(5)
    for t in range(1, 6):
        assert len(levels[t]) == raw_disk_types(t), t
    for t, disks in levels.items():
        for d in disks:
            sc = d.classify_surface()
            assert (sc.kind, sc.genus, sc.boundary_components) == (
                "surface-with-boundary", 0, 1)
            assert len(d.facets) == t


def test_census_table_and_bounds():
    rows = census(6)
    sphere_rows = {r.n_vertices: r for r in rows if r.orientable and r.genus == 0}
    assert sphere_rows[4].count == 1 and sphere_rows[4].endo == "yes"
    assert sphere_rows[5].count == 1
    assert sphere_rows[6].count == 2
    rp2_row = next(r for r in rows if not r.orientable)
    assert rp2_row.count == 1 and rp2_row.endo == "no"
    assert all(r.count <= r.bound for r in rows)

    members = enumerate_surfaces(6)
    table = check_bounds(members)
    assert all(ok for (_, _, _, ok) in table)


def test_bound_values():
    assert manifold_count_bound(2, 10) == 2 ** 40
    assert derived_count_bound(2, 1) == 2 ** 24
    assert manifold_count_bound(3, 2) == 2 ** 18
