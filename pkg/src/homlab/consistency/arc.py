"""Arc consistency for constraints of any arity."""

import logging
from typing import Optional

from homlab.consistency.lists import ListsSpec, UnaryLists
from homlab.consistency.network import ConstraintNetwork
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


def ac(instance: Structure, template: Structure, init: ListsSpec = None) -> Optional[UnaryLists]:
    """Run arc consistency and return the refined lists, or None on rejection.

    A value u survives in L(x) iff for every instance tuple containing x there is a
    template tuple using u at x's positions with every other entry in the current
    lists. Constraints are processed FIFO; when a list shrinks, every other
    constraint on that variable is queued again.

    Args:
        instance: Structure whose elements are the variables
        template: Target structure with the same signature
        init: Optional initial lists (sequence or partial dict)

    Returns:
        The greatest arc-consistent lists below init, or None if one empties

    Examples:
        >>> from homlab.structures.library import complete_graph
        >>> ac(complete_graph(3), complete_graph(2))
        [frozenset({0, 1}), frozenset({0, 1}), frozenset({0, 1})]
    """
    network = ConstraintNetwork(instance, template)
    lists = network.initial_lists(init)
    if not network.propagate(lists):
        return None
    return lists
