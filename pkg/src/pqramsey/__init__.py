"""Ramsey numbers of paths versus stars and quasars: formulas, witnesses, exhaustive checks."""
from .formulas import (
    LinearForest,
    RamseyAnswer,
    conjecture_value,
    interval_sum_contains,
    parsons_path_star,
    path_cycle,
    path_fan,
    path_quasar,
    path_star,
    path_wheel,
    t_closed,
    t_min_char,
)
from .graph import SmallGraph, clique_union, dot_export, graph6_decode, graph6_encode

__version__ = "0.1.0"
