"""Rewriting instances over a pp-expansion into instances over the base structure."""

import logging
from itertools import count
from typing import Dict, List, Mapping as MappingType, Optional, Tuple

from homlab.errors import SignatureMismatchError
from homlab.logic.formula import PPFormula
from homlab.logic.relation import Relation
from homlab.logic.semantics import defined_relation
from homlab.structures.constructions import quotient
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


def pp_reduce_instance(
    instance: Structure,
    definitions: MappingType[str, PPFormula],
    base: Structure,
    expanded: Optional[Structure] = None,
) -> Optional[Structure]:
    """Replace every constraint on a defined symbol by the atoms of its definition.

    Each use of a defined symbol gets fresh copies of the definition's bound
    variables, its free variables are identified with the constraint's scope, and
    equality atoms are eliminated by merging elements. Constraints on base symbols
    are copied unchanged. The result is linear in the size of the input.

    Args:
        instance: Instance over base's signature extended by the defined symbols
        definitions: pp formula over base's signature for each defined symbol
        base: The structure the definitions are interpreted in
        expanded: Optional expanded template; when given, every definition is
            checked to define exactly its relation there

    Returns:
        An equisatisfiable instance over base's signature, or None when a used
        definition contains FALSE (the instance is then unsatisfiable)

    Raises:
        SignatureMismatchError: If the instance uses symbols that are neither base
            symbols nor defined, or a definition does not fit base
        ValueError: If a definition fails the check against expanded
    """
    base_names = set(base.signature.names)
    for symbol, arity in instance.signature:
        if symbol in base_names:
            if base.signature.arity(symbol) != arity:
                raise SignatureMismatchError(f"Symbol '{symbol}' has different arities in instance and base")
        elif symbol not in definitions:
            raise SignatureMismatchError(f"Symbol '{symbol}' is neither in the base signature nor defined")
        elif len(definitions[symbol].free) != arity:
            raise SignatureMismatchError(
                f"Definition of '{symbol}' has {len(definitions[symbol].free)} free variables, arity is {arity}"
            )
    for symbol, phi in definitions.items():
        phi.check_signature(base.signature)
        if expanded is not None and symbol in expanded.signature:
            if defined_relation(phi, base) != Relation.from_structure(expanded, symbol):
                raise ValueError(f"Formula for '{symbol}' does not define its relation in the base structure")

    fresh = count(instance.size)
    relations: Dict[str, List[Tuple[int, ...]]] = {symbol: [] for symbol in base.signature.names}
    equalities: List[Tuple[int, int]] = []
    for symbol, scope in instance.iter_tuples():
        if symbol in base_names:
            relations[symbol].append(scope)
            continue
        phi = definitions[symbol]
        if phi.has_false:
            logger.info("Definition of %s is FALSE; the instance is unsatisfiable", symbol)
            return None
        element = dict(zip(phi.free, scope))
        element.update({v: next(fresh) for v in phi.bound})
        for atom in phi.atoms:
            if atom.is_equality:
                equalities.append((element[atom.variables[0]], element[atom.variables[1]]))
            elif atom.is_relational:
                relations[atom.symbol].append(tuple(element[v] for v in atom.variables))
    size = next(fresh)
    rewritten = Structure(base.signature, size, relations, name=f"{instance.name}-reduced" if instance.name else "")
    if not equalities:
        return rewritten

    parent = list(range(size))

    def find(a: int) -> int:
        while parent[a] != a:
            a = parent[a]
        return a

    for u, v in equalities:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    merged, _ = quotient(rewritten, [find(e) for e in range(size)])
    return merged
