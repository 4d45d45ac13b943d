"""Primitive positive logic: formulas, canonical structures, definability and reductions."""

from homlab.logic.relation import Relation, closure
from homlab.logic.formula import Atom, PPFormula
from homlab.logic.canonical import (
    canonical_database,
    canonical_database_with_map,
    canonical_query,
    eliminate_equalities,
)
from homlab.logic.semantics import defined_relation, evaluate
from homlab.logic.definability import DefinabilityResult, closure_refuter, is_pp_definable
from homlab.logic.reduction import pp_reduce_instance
from homlab.logic.encoding import BinaryEncoding, binary_encoding, matching_symbol, unary_symbol

__all__ = [
    "Relation",
    "closure",
    "Atom",
    "PPFormula",
    "canonical_database",
    "canonical_database_with_map",
    "canonical_query",
    "eliminate_equalities",
    "defined_relation",
    "evaluate",
    "DefinabilityResult",
    "closure_refuter",
    "is_pp_definable",
    "pp_reduce_instance",
    "BinaryEncoding",
    "binary_encoding",
    "matching_symbol",
    "unary_symbol",
]
