"""(k-1, k)-consistency for arbitrary signatures."""

import logging
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from homlab.consistency.lists import ListsSpec, normalize_lists
from homlab.structures.structure import Structure, check_same_signature

logger = logging.getLogger(__name__)

Assignment = Tuple[int, ...]


class _ProjectionChecker:
    """Checks partial assignments against every constraint they touch.

    A constraint whose scope is only partly assigned is satisfied when the assigned
    part extends to some tuple of the template relation.
    """

    def __init__(self, instance: Structure, template: Structure) -> None:
        self.constraints = [
            (scope, template.relation(symbol)) for symbol, scope in instance.iter_tuples()
        ]
        self.by_variable: Dict[int, List[int]] = {}
        for index, (scope, _) in enumerate(self.constraints):
            for var in set(scope):
                self.by_variable.setdefault(var, []).append(index)
        self._projections: Dict[Tuple[int, Tuple[int, ...]], FrozenSet[Tuple[int, ...]]] = {}

    def _projection(self, index: int, positions: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
        key = (index, positions)
        if key not in self._projections:
            scope, relation = self.constraints[index]
            self._projections[key] = frozenset(
                tuple(t[i] for i in positions)
                for t in relation
                if all(t[i] == t[j] for i in range(len(scope)) for j in range(i) if scope[i] == scope[j])
            )
        return self._projections[key]

    def consistent(self, assignment: Dict[int, int], touched: Set[int]) -> bool:
        """Check every constraint that involves a variable in touched."""
        indices = sorted({i for var in touched for i in self.by_variable.get(var, ())})
        for index in indices:
            scope, _ = self.constraints[index]
            positions = tuple(p for p, var in enumerate(scope) if var in assignment)
            values = tuple(assignment[scope[p]] for p in positions)
            if values not in self._projection(index, positions):
                return False
        return True


def k_consistency(instance: Structure, template: Structure, k: int, init: ListsSpec = None) -> bool:
    """Decide acceptance of the (k-1, k)-consistency procedure.

    Maintains, for every sorted (k-1)-subset S of variables, the set H(S) of
    assignments S -> template that respect the lists and every constraint touching
    S. An assignment is dropped when some further variable z admits no value b such
    that every (k-1)-subset of S + {z} keeps its restriction. With fewer than k-1
    variables the whole instance is one subset and the check is exact.

    Args:
        instance: Structure whose elements are the variables
        template: Target structure with the same signature
        k: At least 2; k=2 matches arc consistency and k=3 path consistency on
            binary signatures
        init: Optional initial lists

    Returns:
        True (ACCEPT) iff no H(S) becomes empty
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    check_same_signature(instance, template)
    n, m = instance.size, template.size
    lists = normalize_lists(init, n, m)
    if any(not allowed for allowed in lists):
        return False
    if n == 0:
        return True
    width = min(k - 1, n)
    checker = _ProjectionChecker(instance, template)

    subsets = list(combinations(range(n), width))
    states: Dict[Tuple[int, ...], Set[Assignment]] = {}
    for subset in subsets:
        allowed = set()
        for values in product(*(sorted(lists[v]) for v in subset)):
            assignment = dict(zip(subset, values))
            if checker.consistent(assignment, set(subset)):
                allowed.add(values)
        if not allowed:
            logger.debug("k-consistency: no initial assignment for %s", subset)
            return False
        states[subset] = allowed

    changed = True
    while changed:
        changed = False
        for subset in subsets:
            others = [z for z in range(n) if z not in subset]
            survivors = set()
            for values in sorted(states[subset]):
                assignment = dict(zip(subset, values))
                if all(_extends(assignment, z, lists, states, checker, width) for z in others):
                    survivors.add(values)
            if survivors != states[subset]:
                changed = True
                if not survivors:
                    logger.debug("k-consistency: H(%s) emptied", subset)
                    return False
                states[subset] = survivors
    return True


def _extends(
    assignment: Dict[int, int],
    z: int,
    lists,
    states: Dict[Tuple[int, ...], Set[Assignment]],
    checker: _ProjectionChecker,
    width: int,
) -> bool:
    scope = sorted(list(assignment) + [z])
    for b in sorted(lists[z]):
        extended = dict(assignment)
        extended[z] = b
        if not checker.consistent(extended, {z}):
            continue
        if all(
            tuple(extended[v] for v in sub) in states[sub]
            for sub in combinations(scope, width)
            if z in sub
        ):
            return True
    return False
