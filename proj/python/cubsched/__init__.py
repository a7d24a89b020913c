"""Unit-job scheduling on three uniform machines under a cubic incompatibility graph."""

from ._core import (
    CubicGraph,
    classify,
    cube,
    exists_semi_equitable,
    format_graph,
    greedy_independent_set,
    independence_number,
    k4,
    k33,
    oracle,
    parse_graph,
    petersen,
    prism,
    random_cubic,
    schedule,
    semi_equitable_witness,
)

__all__ = [
    "CubicGraph",
    "classify",
    "cube",
    "exists_semi_equitable",
    "format_graph",
    "greedy_independent_set",
    "independence_number",
    "k4",
    "k33",
    "oracle",
    "parse_graph",
    "petersen",
    "prism",
    "random_cubic",
    "schedule",
    "semi_equitable_witness",
]
