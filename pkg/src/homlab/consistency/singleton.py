"""Singleton arc consistency."""

import logging
from typing import Optional

from homlab.consistency.lists import ListsSpec, UnaryLists
from homlab.consistency.network import ConstraintNetwork
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


def sac(instance: Structure, template: Structure, init: ListsSpec = None) -> Optional[UnaryLists]:
    """Singleton arc consistency.

    Scans (variable, value) pairs in lexicographic order. A value b of L(a) is
    removed when pinning L(a) = {b} on a copy of the lists makes arc consistency
    reject; after each removal arc consistency is re-established on the real lists
    and the scan restarts. Stops after a full pass without removals.

    Returns:
        Singleton arc-consistent lists, or None if some list empties
    """
    network = ConstraintNetwork(instance, template)
    lists = network.initial_lists(init)
    if not network.propagate(lists):
        return None

    removed = True
    while removed:
        removed = False
        for var in range(network.n_vars):
            for value in sorted(lists[var]):
                if len(lists[var]) == 1:
                    break
                trial = list(lists)
                trial[var] = frozenset({value})
                if network.propagate(trial, changed=[var]):
                    continue
                logger.debug("SAC removes value %d from variable %d", value, var)
                lists[var] = lists[var] - {value}
                if not network.propagate(lists, changed=[var]):
                    return None
                removed = True
                break
            if removed:
                break
    return lists
