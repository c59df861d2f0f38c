"""Minimum Roman dominating distance energy of graphs.

A thin wrapper around the C++ core: exact Roman domination solvers, the
labeled distance matrix, its exact characteristic polynomial, eigenvalues
and energy, plus the identity/bound checkers.
"""

from ._core import (
    Graph,
    RomanDominatingFunction,
    Spectrum,
    char_poly,
    diameter,
    distances,
    energy,
    family,
    gamma,
    gamma_r,
    is_connected,
    is_valid_rdf,
    min_rdf,
    min_rdfs,
    mrdd_matrix,
    run_checks,
    spectrum,
    verify_family,
    wiener_index,
)

__all__ = [
    "Graph",
    "RomanDominatingFunction",
    "Spectrum",
    "char_poly",
    "diameter",
    "distances",
    "energy",
    "family",
    "gamma",
    "gamma_r",
    "is_connected",
    "is_valid_rdf",
    "min_rdf",
    "min_rdfs",
    "mrdd_matrix",
    "run_checks",
    "spectrum",
    "verify_family",
    "wiener_index",
]
