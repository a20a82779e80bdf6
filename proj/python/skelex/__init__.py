"""Skeletal expansion of (Z2)^(n+1)-colored regular graphs."""

from ._core import (
    ColoredGraph,
    ParseError,
    PreconditionError,
    census,
    classify,
    connected_sum,
    dualize_poset,
    dualize_simplices,
    expand,
    gen_cube,
    gen_nonorientable_surface,
    gen_orientable_surface,
    gen_prism,
    is_good,
    is_pure,
    isomorphic,
    nest_counts,
    nests,
    parse_graph,
    realize,
    regular,
    serialize_graph,
    sphere_dual,
    validate,
)

__all__ = [
    "ColoredGraph",
    "ParseError",
    "PreconditionError",
    "census",
    "classify",
    "connected_sum",
    "dualize_poset",
    "dualize_simplices",
    "expand",
    "gen_cube",
    "gen_nonorientable_surface",
    "gen_orientable_surface",
    "gen_prism",
    "is_good",
    "is_pure",
    "isomorphic",
    "nest_counts",
    "nests",
    "parse_graph",
    "realize",
    "regular",
    "serialize_graph",
    "sphere_dual",
    "validate",
]
