"""Finite relational structures, constructions, symmetry and cores."""

from homlab.structures.signature import DIGRAPH, Signature
from homlab.structures.structure import (
    Mapping,
    Structure,
    check_same_signature,
    ensure_valid,
    is_homomorphism,
    validate,
)
from homlab.structures.constructions import (
    contract,
    decode_element,
    direct_product,
    disjoint_union,
    encode_tuple,
    expand,
    induced_substructure,
    power,
    projection_mapping,
    quotient,
    reduct,
    singleton_expansion,
)
from homlab.structures.predicates import (
    StructurePredicates,
    has_directed_cycle,
    loop_vertices,
    odd_cycle,
    structure_predicates,
    two_colouring,
    weak_components,
)
from homlab.structures.symmetry import are_isomorphic, automorphisms, find_isomorphism, orbits
from homlab.structures.cores import CoreResult, core, is_core

__all__ = [
    "DIGRAPH",
    "Signature",
    "Mapping",
    "Structure",
    "check_same_signature",
    "ensure_valid",
    "is_homomorphism",
    "validate",
    "contract",
    "decode_element",
    "direct_product",
    "disjoint_union",
    "encode_tuple",
    "expand",
    "induced_substructure",
    "power",
    "projection_mapping",
    "quotient",
    "reduct",
    "singleton_expansion",
    "StructurePredicates",
    "has_directed_cycle",
    "loop_vertices",
    "odd_cycle",
    "structure_predicates",
    "two_colouring",
    "weak_components",
    "are_isomorphic",
    "automorphisms",
    "find_isomorphism",
    "orbits",
    "CoreResult",
    "core",
    "is_core",
]
