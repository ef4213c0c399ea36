"""Derived subdivision: counts, carriers, budgets, neighborhoods."""

import math

import pytest

from scx import BudgetExceededError, InvalidComplexError, SimplicialComplex, full_simplex, octahedron, simplex_boundary
from scx.subdivision import Subdivision, derived_neighborhood, sd, sd_k

from conftest import random_complex


def test_sd_of_triangle():
    s = sd(full_simplex(2))
    assert len(s.complex.facets) == 6
    assert s.complex.f_vector() == (7, 12, 6)
    assert s.complex.euler_characteristic() == 1
    # chain vertices are the faces of the base
    assert set(s.complex.vertices) == set(full_simplex(2).faces())


def test_sd_of_small_spheres():
    s = sd(simplex_boundary(3))
    assert len(s.complex.facets) == 24
    assert s.complex.f_vector() == (14, 36, 24)
    assert s.complex.euler_characteristic() == 2
    assert s.complex.classify_surface().kind == "closed-surface"

    assert len(sd(octahedron()).complex.facets) == 48


def test_facet_count_law_and_euler_on_randoms():
    for seed in range(10):
        c = random_complex(seed)
        s = sd(c).complex
        want = sum(math.factorial(len(F)) for F in c.facets)
        assert len(s.facets) == want
        assert s.euler_characteristic() == c.euler_characteristic()


def test_carrier_and_table():
    s = sd(full_simplex(2))
    assert s.carrier(((0,),)) == (0,)
    assert s.carrier(((0,), (0, 1))) == (0, 1)
    assert s.carrier(((0,), (0, 1), (0, 1, 2))) == (0, 1, 2)
    with pytest.raises(InvalidComplexError):
        s.carrier(((0,), (1, 2)))  # not a chain

    rows = s.table()
    assert len(rows) == len(s.complex.faces())
    assert rows[0][0] == (rows[0][1],)  # a vertex carries its own label


def test_sd_k_rounds():
    c = simplex_boundary(3)
    s2 = sd_k(c, 2)
    assert s2.rounds == 2
    assert len(s2.complex.facets) == 24 * 6
    assert s2.base == sd(c).complex
    assert s2.complex.euler_characteristic() == 2

    s0 = sd_k(c, 0)
    assert s0.complex == c
    assert s0.carrier((0, 1)) == (0, 1)


def test_sd_budget():
    with pytest.raises(BudgetExceededError):
        sd(full_simplex(7), max_facets=1000)
    with pytest.raises(BudgetExceededError):
        sd_k(full_simplex(5), 2, max_facets=1000)  # second round blows up
    err = None
    try:
        sd(full_simplex(7), max_facets=1000)
    except BudgetExceededError as e:
        err = e
    assert err.requested == math.factorial(8) and err.budget == 1000


def test_derived_neighborhood_of_vertex_in_triangle():
    nb = derived_neighborhood(full_simplex(2), SimplicialComplex([(0,)]))
    assert len(nb.facets) == 2
    for F in nb.facets:
        assert (0,) in F


def test_derived_neighborhood_in_surfaces():
    o = octahedron()
    disk = derived_neighborhood(o, SimplicialComplex([(0,)]))
    sc = disk.classify_surface()
    assert (sc.kind, sc.genus, sc.boundary_components) == ("surface-with-boundary", 0, 1)

    edge = derived_neighborhood(simplex_boundary(3), SimplicialComplex([(0, 1)]))
    sc = edge.classify_surface()
    assert (sc.kind, sc.genus, sc.boundary_components) == ("surface-with-boundary", 0, 1)

    equator = SimplicialComplex([(2, 4), (3, 4), (3, 5), (2, 5)])
    ann = derived_neighborhood(o, equator)
    sc = ann.classify_surface()
    assert (sc.kind, sc.euler_characteristic, sc.boundary_components) == (
        "surface-with-boundary", 0, 2)

    disk2 = derived_neighborhood(o, SimplicialComplex([(0,)]), k=2)
    sc = disk2.classify_surface()
    assert (sc.kind, sc.genus, sc.boundary_components) == ("surface-with-boundary", 0, 1)


def test_derived_neighborhood_validates():
    with pytest.raises(InvalidComplexError):
        derived_neighborhood(full_simplex(2), SimplicialComplex([(0, 3)]))
    with pytest.raises(InvalidComplexError):
        derived_neighborhood(full_simplex(2), SimplicialComplex([(0,)]), k=0)


def stellar_star(facets, sigma, apex):
    # independent oracle step: star one face, replacing every facet that
    # contains it by the cones over its deletion walls
    s = set(sigma)
    out = []
    for F in facets:
        if s <= set(F):
            for v in sigma:
                out.append(tuple(x for x in F if x != v) + (apex,))
        else:
            out.append(F)
    return out


def stellar_sd(C):
    """Star every face of C from the top dimension down, fresh apex each."""
    facets = list(C.facets)
    for k in range(C.dim, 0, -1):
        for sigma in sorted(C.faces(k)):
            facets = stellar_star(facets, sigma, ("b", sigma))
    return SimplicialComplex(facets)


def test_sd_agrees_with_stellar_oracle():
    cases = [full_simplex(2), full_simplex(3), simplex_boundary(3),
             SimplicialComplex([(0, 1, 2), (2, 3), (3, 4)])]
    for seed in range(4):
        cases.append(random_complex(seed, n_vertices=6, max_dim=2, n_samples=4))
    for C in cases:
        ref = stellar_sd(C)
        mapping = {}
        for v in ref.vertices:
            mapping[v] = v[1] if isinstance(v, tuple) and v[0] == "b" else (v,)
        assert set(ref.relabel(mapping).facets) == set(sd(C).complex.facets)
