"""Exhaustive homomorphism search, used as a test oracle."""

from itertools import product
from math import prod
from typing import Optional

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.consistency.lists import ListsSpec, normalize_lists
from homlab.structures.structure import Mapping, Structure, check_same_signature


def brute_force_hom(
    instance: Structure,
    template: Structure,
    init: ListsSpec = None,
    guards: Guards = DEFAULT_GUARDS,
) -> Optional[Mapping]:
    """Try every assignment in lexicographic order and return the first homomorphism.

    Raises:
        GuardExceededError: If the number of candidate assignments exceeds max_states
    """
    check_same_signature(instance, template)
    lists = normalize_lists(init, instance.size, template.size)
    guards.check("max_states", prod(len(allowed) for allowed in lists), "brute-force assignments")
    constraints = [(scope, template.relation(symbol)) for symbol, scope in instance.iter_tuples()]
    for candidate in product(*(sorted(allowed) for allowed in lists)):
        if all(tuple(candidate[v] for v in scope) in relation for scope, relation in constraints):
            return Mapping(tuple(candidate), template.size)
    return None
