"""Simplicial complexes, derived subdivisions, collapsibility search, and censuses."""

from .errors import (
    ScxError,
    InvalidComplexError,
    BudgetExceededError,
    NotDerivedSubdivisionError,
    QuotientRejected,
    ScxFormatError,
)
from .complexes import (
    SimplicialComplex,
    DualGraph,
    SurfaceClass,
    face_tuple,
    new_complex,
    full_simplex,
    simplex_boundary,
    octahedron,
)
from .subdivision import (
    Subdivision,
    sd,
    sd_k,
    derived_neighborhood,
)
from .collapse import (
    CollapsePair,
    CollapseSequence,
    CollapseResult,
    EndoReport,
    collapses_to,
    is_collapsible,
    is_endo_collapsible,
    sd_endo_collapsibility_report,
    discrete_morse_vector,
)
from .verify import verify_certificate
from .census import (
    IsoCertificate,
    CensusRow,
    determine_gluing,
    iso,
    canonical_label,
    enumerate_surfaces,
    enumerate_disks,
    manifold_count_bound,
    derived_count_bound,
    census,
    check_bounds,
)
from .reconstruct import (
    rank_coloring,
    rank_colorings,
    reconstruct,
)
from .families import (
    LowerBoundRow,
    triangle_strip,
    strip_sphere,
    strip_surface,
    recover_strip_permutation,
    grid_disk,
    grid_sphere,
    grid_surface,
    polygon_triangulations,
    dyck_words,
    triangulation_from_pattern,
    torus_from_pattern,
    count_torus_outcomes,
    lower_bound_table,
)
from .scxio import (
    canonical_facets,
    complex_to_text,
    complex_from_text,
    read_complex,
    write_complex,
    certificate_to_text,
    certificate_from_text,
    read_certificate,
    write_certificate,
)

__all__ = [
    "ScxError",
    "InvalidComplexError",
    "BudgetExceededError",
    "NotDerivedSubdivisionError",
    "QuotientRejected",
    "ScxFormatError",
    "SimplicialComplex",
    "DualGraph",
    "SurfaceClass",
    "face_tuple",
    "new_complex",
    "full_simplex",
    "simplex_boundary",
    "octahedron",
    "Subdivision",
    "sd",
    "sd_k",
    "derived_neighborhood",
    "CollapsePair",
    "CollapseSequence",
    "CollapseResult",
    "EndoReport",
    "collapses_to",
    "is_collapsible",
    "is_endo_collapsible",
    "sd_endo_collapsibility_report",
    "discrete_morse_vector",
    "verify_certificate",
    "IsoCertificate",
    "CensusRow",
    "determine_gluing",
    "iso",
    "canonical_label",
    "enumerate_surfaces",
    "enumerate_disks",
    "manifold_count_bound",
    "derived_count_bound",
    "census",
    "check_bounds",
    "rank_coloring",
    "rank_colorings",
    "reconstruct",
    "LowerBoundRow",
    "triangle_strip",
    "strip_sphere",
    "strip_surface",
    "recover_strip_permutation",
    "grid_disk",
    "grid_sphere",
    "grid_surface",
    "polygon_triangulations",
    "dyck_words",
    "triangulation_from_pattern",
    "torus_from_pattern",
    "count_torus_outcomes",
    "lower_bound_table",
    "canonical_facets",
    "complex_to_text",
    "complex_from_text",
    "read_complex",
    "write_complex",
    "certificate_to_text",
    "certificate_from_text",
    "read_certificate",
    "write_certificate",
]
