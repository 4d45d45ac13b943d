"""The powerset structure P(B).

Elements are the nonempty subsets of B's domain, encoded as bitmasks; the subset
with mask M is element M - 1, so elements are ordered by mask value and singleton
{u} is element 2^u - 1.
"""

import logging
from itertools import product
from typing import FrozenSet, List, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


def subset_of(element: int) -> FrozenSet[int]:
    """The subset of B that an element of P(B) stands for."""
    mask = element + 1
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def element_of(subset) -> int:
    """Inverse of ``subset_of``."""
    values = set(subset)
    if not values:
        raise ValueError("P(B) only contains nonempty subsets")
    return sum(1 << u for u in values) - 1


def singleton(u: int) -> int:
    return (1 << u) - 1


def _binary_relation(n: int, edges) -> List[Tuple[int, int]]:
    out_masks = [0] * n
    in_masks = [0] * n
    for u, w in edges:
        out_masks[u] |= 1 << w
        in_masks[w] |= 1 << u
    masks = range(1, 1 << n)

    def forward_ok(left: int, right: int) -> bool:
        return all(not (left >> u & 1) or out_masks[u] & right for u in range(n))

    def backward_ok(left: int, right: int) -> bool:
        return all(not (right >> w & 1) or in_masks[w] & left for w in range(n))

    return [
        (left - 1, right - 1)
        for left in masks
        for right in masks
        if forward_ok(left, right) and backward_ok(left, right)
    ]


def _general_relation(n: int, arity: int, tuples) -> List[Tuple[int, ...]]:
    rows = sorted(tuples)
    result = []
    for choice in product(range(1, 1 << n), repeat=arity):
        supported = [0] * arity
        for t in rows:
            if all(choice[j] >> t[j] & 1 for j in range(arity)):
                for j in range(arity):
                    supported[j] |= 1 << t[j]
        if all(supported[j] == choice[j] for j in range(arity)):
            result.append(tuple(m - 1 for m in choice))
    return result


def powerset_structure(b: Structure, guards: Guards = DEFAULT_GUARDS) -> Structure:
    """P(B): (U_1, ..., U_k) is in R iff every u in every U_i extends to a tuple of R
    whose other entries lie in the other U_j.

    Raises:
        GuardExceededError: If b.size exceeds max_powerset_domain, or the tuple
            candidates exceed max_states

    Examples:
        >>> from homlab.structures.library import complete_graph
        >>> sorted(powerset_structure(complete_graph(2)).edges)
        [(0, 1), (1, 0), (2, 2)]
    """
    n = b.size
    guards.check("max_powerset_domain", n, "powerset structure")
    size = (1 << n) - 1
    relations = {}
    for symbol, arity in b.signature:
        guards.check("max_states", size ** arity, f"candidate tuples of P(B) for {symbol}")
        if arity == 2:
            relations[symbol] = _binary_relation(n, b.relation(symbol))
        else:
            relations[symbol] = _general_relation(n, arity, b.relation(symbol))
    logger.debug("P(%s) has %d elements", b.name or "B", size)
    name = f"P({b.name})" if b.name else ""
    return Structure(b.signature, size, relations, name=name)
