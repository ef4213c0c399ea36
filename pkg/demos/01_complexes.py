"""
Building complexes and reading off their structure
==================================================

Facet lists in, combinatorial structure out: faces, links, joins,
orientability and surface recognition.
"""

from scx import SimplicialComplex, octahedron, simplex_boundary

# a complex is just its list of maximal faces; vertices can be any
# sortable labels, faces are stored sorted
disk = SimplicialComplex([(0, 1, 2), (1, 2, 3)])
print("disk facets:", disk.facets)
print("f-vector:", disk.f_vector(), "euler:", disk.euler_characteristic())

# links and stars answer local questions: around the interior edge (1,2)
# the disk looks like two triangles, so the link is two bare vertices
print("link of (1,2):", disk.link((1, 2)).facets)
print("star of (1,2):", disk.star((1, 2)).facets)

# the boundary is where ridges lie in only one facet
print("boundary cycle:", disk.boundary().facets)

# the octahedron is the smallest non-trivial closed surface here;
# classify_surface names the homeomorphism type from the facet list alone
oct = octahedron()
sc = oct.classify_surface()
print("octahedron:", sc.kind, "orientable:", sc.orientable, "genus:", sc.genus)

# the six-vertex real projective plane: still a closed surface, but the
# orientation propagation over the dual graph must fail
rp2 = SimplicialComplex([
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
])
print("rp2 orientation:", rp2.orientation())
sc = rp2.classify_surface()
print("rp2:", sc.kind, "orientable:", sc.orientable, "cross caps:", sc.cross_caps)

# cones and joins build new complexes from old; the cone over a hollow
# tetrahedron boundary fills in a solid-like shell
shell = simplex_boundary(3).cone()
print("cone over the 2-sphere boundary:", shell.dim, "dimensional,",
      len(shell.facets), "facets")

# the dual graph encodes facet adjacency across ridges
dg = oct.dual_graph()
print("dual graph: pseudomanifold", dg.pseudomanifold,
      "connected", dg.connected)
