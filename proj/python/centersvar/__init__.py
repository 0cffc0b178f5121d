"""Centers of projection for pairs of point configurations in P^3."""

from ._centersvar import (
    CentersvarError,
    centers,
    classify_degeneration_n5,
    cubic_locus_n5,
    fano15,
    fano15_lifted,
    g5,
    g5_lifted,
    gale_transform,
    generate_degenerate,
    generate_reconstruction,
    map_a_to_b_n6,
    map_b_to_a_n6,
    morley,
    project,
    stability_class,
    t6,
    t6_lifted,
    weddle_quartic,
)

__all__ = [
    "CentersvarError",
    "centers",
    "classify_degeneration_n5",
    "cubic_locus_n5",
    "fano15",
    "fano15_lifted",
    "g5",
    "g5_lifted",
    "gale_transform",
    "generate_degenerate",
    "generate_reconstruction",
    "map_a_to_b_n6",
    "map_b_to_a_n6",
    "morley",
    "project",
    "stability_class",
    "t6",
    "t6_lifted",
    "weddle_quartic",
]
