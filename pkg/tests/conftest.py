"""Shared generators for randomized tests.

These are deliberately independent of the package internals: maximality
filtering and facet sampling are redone here by hand so that expected values
never lean on the code under test.
"""

import random

from scx import SimplicialComplex


def maximal_faces(faces):
    """Keep the inclusion-maximal members of a family of vertex tuples."""
    faces = [tuple(sorted(set(f), key=repr)) for f in faces]
    out = []
    for f in sorted(set(faces), key=len, reverse=True):
        if not any(set(f) < set(g) for g in out):
            out.append(f)
    return out


def random_complex(seed, n_vertices=8, max_dim=3, n_samples=7):
    """Random complex from sampled faces; always has at least one facet."""
    rng = random.Random(seed)
    faces = []
    for _ in range(n_samples):
        size = rng.randint(1, max_dim + 1)
        faces.append(tuple(rng.sample(range(n_vertices), size)))
    return SimplicialComplex(maximal_faces(faces))


def random_pure_complex(seed, n_vertices=8, dim=2, n_facets=6):
    """Random pure complex with a connected facet graph, grown facet by facet."""
    rng = random.Random(seed)
    first = tuple(rng.sample(range(n_vertices), dim + 1))
    facets = [first]
    guard = 0
    while len(facets) < n_facets and guard < 200:
        guard += 1
        base = list(rng.choice(facets))
        rng.shuffle(base)
        drop = base.pop()
        candidates = [v for v in range(n_vertices) if v not in base and v != drop]
        if not candidates:
            continue
        new = tuple(sorted(base + [rng.choice(candidates)]))
        if new not in {tuple(sorted(F)) for F in facets}:
            facets.append(new)
    return SimplicialComplex(maximal_faces(facets))
