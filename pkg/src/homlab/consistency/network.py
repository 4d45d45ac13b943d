"""Constraint network view of a (instance, template) pair, shared by AC, SAC and search."""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from homlab.consistency.lists import ListsSpec, UnaryLists, normalize_lists
from homlab.structures.structure import Structure, check_same_signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constraint:
    """One instance tuple together with the template relation it must land in.

    ``variables`` lists the distinct variables of the scope in first-occurrence
    order; ``positions[i]`` are the scope positions holding ``variables[i]``.
    """

    symbol: str
    scope: Tuple[int, ...]
    variables: Tuple[int, ...]
    positions: Tuple[Tuple[int, ...], ...]
    tuples: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, symbol: str, scope: Tuple[int, ...], tuples: Tuple[Tuple[int, ...], ...]) -> "Constraint":
        order: Dict[int, List[int]] = {}
        for position, var in enumerate(scope):
            order.setdefault(var, []).append(position)
        variables = tuple(order)
        positions = tuple(tuple(order[v]) for v in variables)
        if any(len(p) > 1 for p in positions):
            # repeated variables: keep only tuples that agree on repeated positions
            tuples = tuple(t for t in tuples if all(len({t[i] for i in p}) == 1 for p in positions))
        return cls(symbol, scope, variables, positions, tuples)

    def supports(self, lists: UnaryLists) -> List[frozenset]:
        """Values of each distinct variable that occur in some tuple alive under lists."""
        doms = [lists[v] for v in self.variables]
        firsts = [p[0] for p in self.positions]
        if len(firsts) == 1:
            i = firsts[0]
            d = doms[0]
            return [frozenset(t[i] for t in self.tuples if t[i] in d)]
        if len(firsts) == 2:
            i, j = firsts
            d0, d1 = doms
            left, right = set(), set()
            for t in self.tuples:
                if t[i] in d0 and t[j] in d1:
                    left.add(t[i])
                    right.add(t[j])
            return [frozenset(left), frozenset(right)]
        found = [set() for _ in firsts]
        pairs = list(zip(firsts, doms))
        for t in self.tuples:
            if all(t[i] in d for i, d in pairs):
                for slot, i in enumerate(firsts):
                    found[slot].add(t[i])
        return [frozenset(s) for s in found]


class ConstraintNetwork:
    """Constraints of an instance over a template, with a generalised AC-3 propagator.

    Responsibilities:
    - Turn every instance tuple into a Constraint over the template relation
    - Index constraints by variable
    - Propagate the support rule from a given state to its greatest fixed point

    Not responsible for:
    - Choosing variables or values (see homlab.search.backtracking)
    - Pair or k-tuple consistency (see path and kcons)
    """

    def __init__(self, instance: Structure, template: Structure) -> None:
        check_same_signature(instance, template)
        self.instance = instance
        self.template = template
        self.n_vars = instance.size
        self.domain_size = template.size
        tuple_cache = {s: tuple(template.sorted_relation(s)) for s in template.signature.names}
        self.constraints: List[Constraint] = [
            Constraint.build(symbol, scope, tuple_cache[symbol]) for symbol, scope in instance.iter_tuples()
        ]
        self.incident: List[List[int]] = [[] for _ in range(self.n_vars)]
        for index, constraint in enumerate(self.constraints):
            for var in constraint.variables:
                self.incident[var].append(index)

    def initial_lists(self, init: ListsSpec = None) -> UnaryLists:
        return normalize_lists(init, self.n_vars, self.domain_size)

    def propagate(self, lists: UnaryLists, changed: Optional[Iterable[int]] = None) -> bool:
        """Shrink lists in place (by replacement) to the arc-consistent fixed point.

        Args:
            lists: State to refine; entries are replaced, never mutated
            changed: Variables whose lists changed since the last fixed point.
                None means start from scratch with every constraint queued.

        Returns:
            False iff some list became empty
        """
        if any(not allowed for allowed in lists):
            return False
        if changed is None:
            queue = deque(range(len(self.constraints)))
        else:
            queue = deque()
            seen = set()
            for var in changed:
                for index in self.incident[var]:
                    if index not in seen:
                        seen.add(index)
                        queue.append(index)
        queued = set(queue)
        while queue:
            index = queue.popleft()
            queued.discard(index)
            constraint = self.constraints[index]
            supported = constraint.supports(lists)
            for var, values in zip(constraint.variables, supported):
                if values == lists[var]:
                    continue
                lists[var] = values
                if not values:
                    logger.debug("List of variable %d emptied by %s%s", var, constraint.symbol, constraint.scope)
                    return False
                for other in self.incident[var]:
                    if other != index and other not in queued:
                        queued.add(other)
                        queue.append(other)
        return True
