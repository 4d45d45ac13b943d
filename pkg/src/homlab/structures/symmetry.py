"""Automorphisms, orbits and isomorphism tests by exhaustive search."""

import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.structures.structure import Mapping, Structure

logger = logging.getLogger(__name__)


def automorphisms(a: Structure, guards: Guards = DEFAULT_GUARDS) -> List[Mapping]:
    """All automorphisms of a, as permutations in lexicographic order.

    On a finite structure a bijective endomorphism is an automorphism, so this
    enumerates injective homomorphisms a -> a.

    Raises:
        GuardExceededError: If a.size exceeds max_domain
    """
    from homlab.search import backtracking

    guards.check("max_domain", a.size, "automorphism search")
    found = sorted(backtracking.iter_homomorphisms(a, a, injective=True), key=lambda h: h.table)
    logger.debug("%d automorphisms of %r", len(found), a)
    return found


def find_isomorphism(a: Structure, b: Structure, guards: Guards = DEFAULT_GUARDS) -> Optional[Mapping]:
    """An isomorphism a -> b, or None."""
    from homlab.search import backtracking

    if a.signature != b.signature or a.size != b.size:
        return None
    if any(len(a.relation(s)) != len(b.relation(s)) for s in a.signature.names):
        return None
    guards.check("max_domain", a.size, "isomorphism search")
    # injective + equal tuple counts makes the image of every relation all of b's relation
    return next(backtracking.iter_homomorphisms(a, b, injective=True, limit=1), None)


def are_isomorphic(a: Structure, b: Structure, guards: Guards = DEFAULT_GUARDS) -> bool:
    return find_isomorphism(a, b, guards) is not None


def orbits(a: Structure, k: int, guards: Guards = DEFAULT_GUARDS) -> List[List[Tuple[int, ...]]]:
    """Orbits of k-tuples under the componentwise action of Aut(a).

    Each orbit is sorted; orbits are ordered by their least tuple.

    Examples:
        >>> from homlab.structures.library import complete_graph
        >>> len(orbits(complete_graph(3), 2))
        2
    """
    if k < 1:
        raise ValueError(f"Tuple length must be positive, got {k}")
    guards.check("max_states", a.size ** k, f"{k}-tuples")
    group = automorphisms(a, guards)
    seen: Dict[Tuple[int, ...], int] = {}
    result: List[List[Tuple[int, ...]]] = []
    for t in product(range(a.size), repeat=k):
        if t in seen:
            continue
        orbit = sorted({tuple(g[v] for v in t) for g in group})
        for member in orbit:
            seen[member] = len(result)
        result.append(orbit)
    return result
