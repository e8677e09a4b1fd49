"""Exact crossing combinatorics for the augmented cube AQ_n.

Vertices are plain ints (bit i of the label is ``(a >> (i - 1)) & 1``) and
every count is an exact int or :class:`fractions.Fraction`.
"""

from aqcross.aqcube import AugmentedCube, build, dim, edges_between, find_k44_witness, incident_edge
from aqcross.arcdiagram import ArcDiagram, CoverProfile, cover_profile, crossings, upsilon
from aqcross.blacklayout import BlackLayout, count_black, layout_black
from aqcross.formulas import ComponentBreakdown, breakdown, component, lower_bound, total, upper_bound
from aqcross.partition import canonical_names, eight_parts, hat, omega, pi
from aqcross.seqtables import SeqTable, s_table, t_prime, t_table

__version__ = "0.1.0"

__all__ = [
    "ArcDiagram",
    "AugmentedCube",
    "BlackLayout",
    "ComponentBreakdown",
    "CoverProfile",
    "SeqTable",
    "breakdown",
    "build",
    "canonical_names",
    "component",
    "count_black",
    "cover_profile",
    "crossings",
    "dim",
    "edges_between",
    "eight_parts",
    "find_k44_witness",
    "hat",
    "incident_edge",
    "layout_black",
    "lower_bound",
    "omega",
    "pi",
    "s_table",
    "t_prime",
    "t_table",
    "total",
    "upper_bound",
    "upsilon",
]
