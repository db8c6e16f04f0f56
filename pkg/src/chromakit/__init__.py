"""Exact chromatic polynomials, with four independent engines for cycle graphs."""

from .bijection import count_via_bijection, decode_psi, encode_phi
from .deletion_contraction import chromatic_polynomial, chromatic_polynomial_dc
from .formulas import complete_closed_form, cycle_closed_form, path_closed_form
from .graph import Multigraph, complete_graph, cycle_graph, new_graph, path_graph
from .inclusion_exclusion import chromatic_by_subsets, cycle_inclusion_exclusion
from .oracle import count_proper_colorings
from .polynomial import IntPolynomial
from .walks import chromatic_count_via_walks

__all__ = [
    "IntPolynomial",
    "Multigraph",
    "chromatic_by_subsets",
    "chromatic_count_via_walks",
    "chromatic_polynomial",
    "chromatic_polynomial_dc",
    "complete_closed_form",
    "complete_graph",
    "count_proper_colorings",
    "count_via_bijection",
    "cycle_closed_form",
    "cycle_graph",
    "cycle_inclusion_exclusion",
    "decode_psi",
    "encode_phi",
    "new_graph",
    "path_closed_form",
    "path_graph",
]
