"""The powerset structure and the tree-duality decision."""

from homlab.powerset.structure import element_of, powerset_structure, singleton, subset_of
from homlab.powerset.solvability import (
    SolvabilityResult,
    ac_solvability,
    extract_totally_symmetric,
    totally_symmetric_polymorphism,
)

__all__ = [
    "element_of",
    "powerset_structure",
    "singleton",
    "subset_of",
    "SolvabilityResult",
    "ac_solvability",
    "extract_totally_symmetric",
    "totally_symmetric_polymorphism",
]
