"""Exact equivariant Ehrhart theory for order polytopes of sign-graded posets."""

from .ehrhart import (
    LatticePolytopeHRep,
    count_points,
    cross_polytope,
    equivariant_hstar,
    generic_equivariant_hstar,
    hstar,
    hstar_via_saturations,
)
from .errors import OrderGammaError
from .gamma import (
    GammaPolynomial,
    cube_gamma,
    effectiveness_report,
    gamma_extract,
    gamma_from_hstar,
    gamma_via_saturations,
)
from .polynomials import CharPolynomial, IntPolynomial
from .poset import (
    FinitePoset,
    LabeledPoset,
    Saturation,
    analyze,
    automorphism_group,
    enumerate_saturations,
    quotient,
    saturation_orbits,
    to_parity_form,
)

__all__ = [
    "CharPolynomial",
    "FinitePoset",
    "GammaPolynomial",
    "IntPolynomial",
    "LabeledPoset",
    "LatticePolytopeHRep",
    "OrderGammaError",
    "Saturation",
    "analyze",
    "automorphism_group",
    "count_points",
    "cross_polytope",
    "cube_gamma",
    "effectiveness_report",
    "enumerate_saturations",
    "equivariant_hstar",
    "gamma_extract",
    "gamma_from_hstar",
    "gamma_via_saturations",
    "generic_equivariant_hstar",
    "hstar",
    "hstar_via_saturations",
    "quotient",
    "saturation_orbits",
    "to_parity_form",
]
