"""
Derived subdivisions and derived neighborhoods
==============================================

Every facet of the derived subdivision is a chain of faces of the base
complex, so the facet count is a sum of factorials and the Euler
characteristic never moves.
"""

from math import factorial

from scx import (
    SimplicialComplex,
    derived_neighborhood,
    full_simplex,
    octahedron,
    sd,
    sd_k,
)

# subdividing a single triangle cuts it into 3! = 6 small triangles
tri = full_simplex(2)
sub = sd(tri)
print("sd(triangle):", len(sub.complex.facets), "facets,",
      len(sub.complex.vertices), "vertices")

# each new vertex is literally a face of the base complex
print("new vertices:", sub.complex.vertices)

# the counting law: one (d+1)! block per base facet
oct = octahedron()
predicted = sum(factorial(len(f)) for f in oct.facets)
got = len(sd(oct).complex.facets)
print("octahedron: predicted", predicted, "facets, got", got)

# the Euler characteristic is a topological invariant, so it survives
print("euler before:", oct.euler_characteristic(),
      "after:", sd(oct).complex.euler_characteristic())

# sd_k iterates; growth is fast, which is why budgets exist
twice = sd_k(oct, 2)
print("sd^2(octahedron):", len(twice.complex.facets), "facets")

# the carrier map sends each face of the subdivision to the smallest
# base face containing it, so subcomplexes of the base pull back to
# subcomplexes of the subdivision
one = sd(oct)
f = one.complex.facets[0]
print("carrier of", f, "is", one.carrier(f))

# a derived neighborhood thickens a subcomplex inside the subdivision:
# take the equator 4-cycle of the octahedron and thicken it once
equator = SimplicialComplex([(0, 2), (2, 1), (1, 3), (3, 0)])
nb = derived_neighborhood(oct, equator)
sc = nb.classify_surface()
print("neighborhood of the equator:", sc.kind,
      "genus", sc.genus, "boundary components", sc.boundary_components)
