"""
Gluing determination, isomorphism and a small census
====================================================

On pseudomanifolds the dual graph is thin enough that a gluing of two
complexes is pinned down by where a single facet goes.  The same rigidity
powers isomorphism testing and a census of small triangulated spheres.
"""

import random

from scx import (
    census,
    determine_gluing,
    enumerate_surfaces,
    iso,
    manifold_count_bound,
    octahedron,
    simplex_boundary,
)

# plant a relabeling of the octahedron and hand the solver one facet
oct = octahedron()
rng = random.Random(11)
image = list(oct.vertices)
rng.shuffle(image)
planted = dict(zip(oct.vertices, image))
twin = oct.relabel(planted)

seed_facet = oct.facets[0]
seed_image = tuple(planted[v] for v in seed_facet)
found = determine_gluing(oct, twin, (seed_facet, seed_image))
print("gluing recovered from one facet:", found == planted)

# iso searches for such a seed itself and returns a checkable witness
cert = iso(oct, twin)
print("iso found a mapping:", cert is not None,
      "and it checks:", cert.check(oct, twin))

# non-isomorphic pairs come back None
print("octahedron vs tetrahedron boundary:",
      iso(oct, simplex_boundary(3)))

# enumerate_surfaces lists closed surface triangulations on n vertices
# up to isomorphism; at 6 vertices the octahedron is joined by rp2
for surf in enumerate_surfaces(6):
    sc = surf.classify_surface()
    print("6 vertices:", len(surf.facets), "facets,", sc.kind,
          "orientable" if sc.orientable else "non-orientable")

# the census drives the same enumeration through the collapsibility
# machinery and compares against the crude exponential counting bound;
# a row counts the surfaces sharing vertex number and topological type
for row in census(7):
    kind = ("genus %d" % row.genus) if row.orientable else \
        ("non-orientable, genus %d" % row.genus)
    print("n =", row.n_vertices, "(%s):" % kind, row.count, "found,",
          "endo-collapsible:", row.endo,
          "min facets:", row.min_facets,
          "bound:", row.bound)

# the bound itself: at most 2^(d^2 N) d-manifolds with N facets
print("bound for d=2, N=10:", manifold_count_bound(2, 10))
