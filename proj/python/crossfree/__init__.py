"""Partitions avoiding right crossings, matchings avoiding 2-right crossings
and right nestings, the sequence family S(n, k), and the maps between them."""

from ._core import (
    Diagram,
    NotInClassError,
    __version__,
    all_partial_matchings,
    all_partitions,
    alpha,
    alpha_inv,
    alpha_trace,
    avoids,
    count,
    count_row,
    count_statistic,
    enumerate,
    expand,
    find_patterns,
    format_diagram,
    format_sequence,
    gf_coefficients,
    is_valid_S,
    lr_maxima,
    matches,
    parse_diagram,
    parse_sequence,
    reduce,
    verify,
)

__all__ = [
    "Diagram",
    "NotInClassError",
    "all_partial_matchings",
    "all_partitions",
    "alpha",
    "alpha_inv",
    "alpha_trace",
    "avoids",
    "count",
    "count_row",
    "count_statistic",
    "enumerate",
    "expand",
    "find_patterns",
    "format_diagram",
    "format_sequence",
    "gf_coefficients",
    "is_valid_S",
    "lr_maxima",
    "matches",
    "parse_diagram",
    "parse_sequence",
    "reduce",
    "verify",
]
