"""Symmetric bases of GF(2) quadratic spaces and Cayley graphs of extraspecial 2-groups."""

from .cayley import Graph, build_cayley, hypercube, is_cover, quotient_by_center, symmetric_cayley_graph
from .extraspecial import ExtraspecialGroup, GroupElement, from_standard_presentation, from_symmetric_generators
from .gf2 import GF2Vector
from .quadratic import FormType, QuadraticForm, arf_invariant, classify, standard_form
from .symmetric_basis import (
    NotExists,
    SymmetricBasis,
    brute_force_symmetric_basis,
    construct_symmetric_basis,
    exists_symmetric_basis,
    is_symmetric_basis,
)

__all__ = [
    "ExtraspecialGroup",
    "FormType",
    "GF2Vector",
    "Graph",
    "GroupElement",
    "NotExists",
    "QuadraticForm",
    "SymmetricBasis",
    "arf_invariant",
    "brute_force_symmetric_basis",
    "build_cayley",
    "classify",
    "construct_symmetric_basis",
    "exists_symmetric_basis",
    "from_standard_presentation",
    "from_symmetric_generators",
    "hypercube",
    "is_cover",
    "is_symmetric_basis",
    "quotient_by_center",
    "standard_form",
    "symmetric_cayley_graph",
]
