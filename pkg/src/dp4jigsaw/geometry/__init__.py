"""Exact polyhedral geometry over the rationals."""

from .polytope import (AffineForm, ConeLineDiagnostic, HPolytope,
                       RationalCone, VPolytope, box, cone_contains_line,
                       enumerate_vertices, exact_volume, interiors_disjoint,
                       monte_carlo_volume, product_polytope, slice_polytope,
                       standard_simplex, strictly_feasible, unimodular_image)

__all__ = [
    "AffineForm", "ConeLineDiagnostic", "HPolytope", "RationalCone",
    "VPolytope", "box", "cone_contains_line", "enumerate_vertices",
    "exact_volume", "interiors_disjoint", "monte_carlo_volume",
    "product_polytope", "slice_polytope", "standard_simplex",
    "strictly_feasible", "unimodular_image",
]
