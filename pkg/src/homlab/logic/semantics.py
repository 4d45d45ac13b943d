"""Truth of pp formulas in a structure, by homomorphism search from the canonical database."""

import logging
from itertools import product
from typing import Dict, Mapping as MappingType

from homlab.logic.canonical import canonical_database_with_map
from homlab.logic.formula import PPFormula
from homlab.logic.relation import Relation
from homlab.search.backtracking import search_hom
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


def evaluate(phi: PPFormula, b: Structure, assignment: MappingType[str, int]) -> bool:
    """Truth of phi in b when its free variables take the given values.

    phi holds iff CD(phi) maps to b with every free variable sent to its value.

    Raises:
        SignatureMismatchError: If an atom does not fit b's signature
        ValueError: If a free variable is unassigned or a value is out of range
    """
    phi.check_signature(b.signature)
    for v in phi.free:
        if v not in assignment:
            raise ValueError(f"Free variable '{v}' has no value")
        if not 0 <= assignment[v] < b.size:
            raise ValueError(f"Value {assignment[v]} of '{v}' is outside 0..{b.size - 1}")
    if phi.has_false:
        return False
    if not phi.variables:
        return True
    cd, element = canonical_database_with_map(phi, b.signature)
    lists: Dict[int, frozenset] = {}
    for v in phi.free:
        e = element[v]
        lists[e] = lists.get(e, frozenset(range(b.size))) & {assignment[v]}
    if any(not allowed for allowed in lists.values()):
        return False
    return search_hom(cd, b, lists) is not None


def defined_relation(phi: PPFormula, b: Structure) -> Relation:
    """All tuples of values for the free variables (in declaration order) satisfying phi."""
    phi.check_signature(b.signature)
    k = len(phi.free)
    if phi.has_false:
        return Relation(k, b.size, frozenset())
    tuples = [
        values
        for values in product(range(b.size), repeat=k)
        if evaluate(phi, b, dict(zip(phi.free, values)))
    ]
    logger.debug("Formula defines %d of %d tuples", len(tuples), b.size ** k)
    return Relation(k, b.size, frozenset(tuples))
