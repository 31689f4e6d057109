"""Pants decomposition graphs of closed surfaces."""

from ._core import (
    Graph,
    PantsError,
    atlas_jsonl,
    cage_lower_bound,
    diameter,
    distance_bound,
    generator_weight,
    girth_upper_bound,
    is_isomorphic,
    oloops,
    orbit_count,
    orbit_representatives,
    path_between,
    path_to_oloops,
    pull_all_loops,
    pull_loops_bound,
    diameter_bound,
)

__all__ = [
    "Graph",
    "PantsError",
    "atlas_jsonl",
    "cage_lower_bound",
    "diameter",
    "distance_bound",
    "generator_weight",
    "girth_upper_bound",
    "is_isomorphic",
    "oloops",
    "orbit_count",
    "orbit_representatives",
    "path_between",
    "path_to_oloops",
    "pull_all_loops",
    "pull_loops_bound",
    "diameter_bound",
]
