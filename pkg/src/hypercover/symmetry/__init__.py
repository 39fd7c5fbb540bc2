"""Graph automorphisms, permutation groups and symmetry certificates."""

from .certificates import (
    CHECK_GROUPS,
    CHECKS,
    CheckResult,
    NormalityReport,
    TheoremReport,
    aut,
    expected_aut_order,
    fixed_cycle_check,
    is_2_arc_transitive,
    is_normal_cayley,
    is_two_transitive_on,
    is_vertex_transitive,
    pointwise_neighborhood_stabilizer,
    right_regular_embedding,
    sigma_tilde_permutations,
    stabilizer,
    two_arc_orbits,
    verify_main_theorem,
)
from .oracle import enumerate_automorphisms
from .perm import Perm, PermGroup, compose, conjugate, cycle_notation, identity, invert
from .search import AutomorphismResult, automorphism_group

__all__ = [
    "aut",
    "automorphism_group",
    "AutomorphismResult",
    "CHECK_GROUPS",
    "CheckResult",
    "CHECKS",
    "compose",
    "conjugate",
    "cycle_notation",
    "enumerate_automorphisms",
    "expected_aut_order",
    "fixed_cycle_check",
    "identity",
    "invert",
    "is_2_arc_transitive",
    "is_normal_cayley",
    "is_two_transitive_on",
    "is_vertex_transitive",
    "NormalityReport",
    "Perm",
    "PermGroup",
    "pointwise_neighborhood_stabilizer",
    "right_regular_embedding",
    "sigma_tilde_permutations",
    "stabilizer",
    "TheoremReport",
    "two_arc_orbits",
    "verify_main_theorem",
]
