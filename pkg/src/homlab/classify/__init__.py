"""Complexity classifiers for CSP templates."""

from homlab.classify.verdict import Complexity, PropertyVerdict, Verdict
from homlab.classify.schaefer import preservation_violation, schaefer, schaefer_operations
from homlab.classify.graphs import hell_nesetril, smooth_digraph
from homlab.classify.dichotomy import dichotomy
from homlab.classify.width import bounded_width, tree_duality
from homlab.classify.cyclic import CyclicProfile, cyclic_arity_profile

__all__ = [
    "Complexity",
    "PropertyVerdict",
    "Verdict",
    "preservation_violation",
    "schaefer",
    "schaefer_operations",
    "hell_nesetril",
    "smooth_digraph",
    "dichotomy",
    "bounded_width",
    "tree_duality",
    "CyclicProfile",
    "cyclic_arity_profile",
]
