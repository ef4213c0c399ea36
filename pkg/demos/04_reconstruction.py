"""
Recognizing a derived subdivision and inverting it
==================================================

The facets of a derived subdivision are chains of faces of the base.
Reading the chain ranks back off the bare complex is a constraint
satisfaction problem; solving it recovers the base complex without any
labels surviving.
"""

import random

from scx import (
    NotDerivedSubdivisionError,
    SimplicialComplex,
    iso,
    octahedron,
    reconstruct,
    sd,
)

# subdivide, then forget the structured labels entirely
base = octahedron()
derived = sd(base).complex
scrambled = derived.relabel({v: i for i, v in enumerate(derived.vertices)})
print("scrambled derived complex:", len(scrambled.facets), "facets,",
      "labels are plain integers")

# reconstruct finds the unique rank structure and rebuilds the base
found = reconstruct(scrambled)
print("reconstructed:", len(found.facets), "facets")

# the result matches the original up to relabeling
cert = iso(found, base)
print("isomorphic to the original octahedron:", cert is not None)
print("one witness mapping entry:", next(iter(cert.as_dict().items())))

# the check is exact: rebuilding the subdivision of the candidate must
# reproduce the input facet for facet, so near misses are rejected
pentagon = SimplicialComplex([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
try:
    reconstruct(pentagon)
except NotDerivedSubdivisionError as e:
    print("5-cycle rejected:", e)

# a 6-cycle, on the other hand, really is the derived subdivision of a
# triangle boundary
hexagon = SimplicialComplex([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
print("6-cycle reconstructs to:", reconstruct(hexagon).facets)

# round trip on a random complex
rng = random.Random(7)
verts = list(range(8))
facets = [tuple(sorted(rng.sample(verts, 3))) for _ in range(6)]
ran = SimplicialComplex(facets)
back = reconstruct(sd(ran).complex)
print("random complex round trip isomorphic:", iso(back, ran) is not None)
