"""Exact combinatorics of affine semigroups and local cohomology of their canonical modules."""

__version__ = "0.1.0"

from .cone import Face, FaceLattice, PointedCone, cone_from_generators, is_simplicial_mod_units
from .errors import BudgetExhausted, SemicohError
from .semigroup import AffineSemigroup, tau_plus

__all__ = [
    "AffineSemigroup",
    "BudgetExhausted",
    "Face",
    "FaceLattice",
    "PointedCone",
    "SemicohError",
    "cone_from_generators",
    "is_simplicial_mod_units",
    "tau_plus",
]
