"""The canonical query of a structure and the canonical database of a formula."""

from typing import Dict, Optional, Tuple

from homlab.logic.formula import Atom, PPFormula
from homlab.structures.signature import Signature
from homlab.structures.structure import Structure


def canonical_query(a: Structure, prefix: str = "v") -> PPFormula:
    """One existential variable per element and one atom per tuple, no free variables.

    Examples:
        >>> from homlab.structures.library import loop
        >>> str(canonical_query(loop()))
        'pp ; exists v0 ; E(v0,v0)'
    """
    names = tuple(f"{prefix}{e}" for e in a.elements)
    atoms = tuple(Atom.relation(symbol, *(names[v] for v in t)) for symbol, t in a.iter_tuples())
    return PPFormula((), names, atoms)


def eliminate_equalities(phi: PPFormula) -> Dict[str, str]:
    """Representative of every variable after equality elimination.

    Equalities are processed left to right; each merges two classes and the one whose
    representative comes later in declaration order (free first, then bound) is
    substituted by the earlier one.
    """
    order = {v: i for i, v in enumerate(phi.variables)}
    representative = {v: v for v in phi.variables}

    def find(v: str) -> str:
        while representative[v] != v:
            v = representative[v]
        return v

    for atom in phi.atoms:
        if not atom.is_equality:
            continue
        left, right = find(atom.variables[0]), find(atom.variables[1])
        if left == right:
            continue
        earlier, later = (left, right) if order[left] < order[right] else (right, left)
        representative[later] = earlier
    return {v: find(v) for v in phi.variables}


def canonical_database_with_map(
    phi: PPFormula, signature: Optional[Signature] = None
) -> Tuple[Structure, Dict[str, int]]:
    """CD(phi) together with the element each variable became.

    Elements are numbered by the declaration order of their representatives.

    Raises:
        ValueError: If phi contains FALSE or has no variables
    """
    if phi.has_false:
        raise ValueError("The canonical database of a formula containing FALSE does not exist")
    if not phi.variables:
        raise ValueError("The canonical database of a formula without variables is empty")
    if signature is None:
        signature = phi.inferred_signature()
    else:
        phi.check_signature(signature)
    representative = eliminate_equalities(phi)
    numbering: Dict[str, int] = {}
    for v in phi.variables:
        numbering.setdefault(representative[v], len(numbering))
    element = {v: numbering[representative[v]] for v in phi.variables}
    relations: Dict[str, list] = {symbol: [] for symbol in signature.names}
    for atom in phi.atoms:
        if atom.is_relational:
            relations[atom.symbol].append(tuple(element[v] for v in atom.variables))
    return Structure(signature, len(numbering), relations, name="CD"), element


def canonical_database(phi: PPFormula, signature: Optional[Signature] = None) -> Structure:
    """CD(phi): equalities eliminated, variables as elements, atoms as tuples.

    Args:
        phi: Formula without FALSE
        signature: Target signature; inferred from the atoms when omitted
    """
    structure, _ = canonical_database_with_map(phi, signature)
    return structure
