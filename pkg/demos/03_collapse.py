"""
Collapsibility searches and replayable certificates
===================================================

A collapse removes a free face together with the unique facet containing
it.  Whether a complex collapses to a point, or to its own boundary after
one facet is deleted, is a search problem; a successful search emits a
certificate that replays step by step.
"""

from scx import (
    discrete_morse_vector,
    full_simplex,
    is_collapsible,
    is_endo_collapsible,
    octahedron,
    sd,
    simplex_boundary,
    verify_certificate,
)

# a solid triangle collapses to a point
res = is_collapsible(full_simplex(2))
print("solid triangle collapsible:", res.verdict)
print("certificate pairs:", res.certificate.pairs)

# every certificate is cheap to check independently of the search
ok, msg = verify_certificate(res.certificate)
print("replay:", ok, msg)

# a closed surface has no free faces at all, so the search fails fast
res = is_collapsible(octahedron())
print("octahedron collapsible:", res.verdict, "|", res.reason)

# endo-collapsibility: delete one facet, then collapse onto the boundary
# of the original complex; for a sphere the boundary is empty, so this
# means collapsing the punctured sphere to a single point
res = is_endo_collapsible(simplex_boundary(3), facet=(0, 1, 2))
print("punctured sphere boundary endo-collapsible:", res.verdict,
      "removing", res.certificate.removed_facet)
ok, msg = verify_certificate(res.certificate)
print("replay:", ok, msg)

# facet=None tries facets until one works (for these spheres any choice
# gives the same verdict)
res = is_endo_collapsible(octahedron())
print("octahedron endo-collapsible:", res.verdict,
      "removing", res.certificate.removed_facet)

# a discrete Morse vector counts the critical cells a collapse sequence
# leaves behind; (1, 0, 1) for the octahedron means one critical vertex
# and one critical triangle, the minimum a 2-sphere allows
print("morse vector of the octahedron:", discrete_morse_vector(octahedron()))

# collapsibility is not preserved by subdivision in general, but derived
# subdivisions of small collapsible complexes stay collapsible
res = is_collapsible(sd(full_simplex(3)).complex)
print("sd(solid tetrahedron) collapsible:", res.verdict,
      "in", len(res.certificate.pairs), "elementary collapses")
