"""Fair pentagon tilings: geometry kernel, hexagon splitting, patch generation."""

from ._core import (
    HEXAGON_AREA,
    PENTAGON_AREA,
    PENTAGON_PERIMETER,
    Tiling,
    congruence_distance,
    eps_closeness,
    generate_patch,
    interior_angles,
    jacobian_closed_form,
    jacobian_determinant,
    load_tiling,
    parse_tiling,
    perimeter,
    reference_patch,
    regular_hexagon,
    side_figure,
    side_figure_distance,
    signed_area,
    split_hexagon,
    verify,
)

__all__ = [
    "HEXAGON_AREA",
    "PENTAGON_AREA",
    "PENTAGON_PERIMETER",
    "Tiling",
    "congruence_distance",
    "eps_closeness",
    "generate_patch",
    "interior_angles",
    "jacobian_closed_form",
    "jacobian_determinant",
    "load_tiling",
    "parse_tiling",
    "perimeter",
    "reference_patch",
    "regular_hexagon",
    "side_figure",
    "side_figure_distance",
    "signed_area",
    "split_hexagon",
    "verify",
]
