"""Arities of cyclic polymorphisms."""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import GuardExceededError
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.operation import Operation
from homlab.polymorphisms.search import Outcome, find_special
from homlab.structures.structure import Structure, ensure_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicProfile:
    """Outcome of the cyclic search per arity, with the operations found."""

    outcomes: Dict[int, Outcome]
    operations: Dict[int, Operation] = field(default_factory=dict)

    @property
    def arities(self) -> FrozenSet[int]:
        return frozenset(k for k, outcome in self.outcomes.items() if outcome is Outcome.FOUND)

    @property
    def complete(self) -> bool:
        return all(outcome is not Outcome.INCONCLUSIVE for outcome in self.outcomes.values())


def cyclic_arity_profile(b: Structure, max_arity: int, guards: Guards = DEFAULT_GUARDS) -> CyclicProfile:
    """Search for a cyclic polymorphism c(x_1,...,x_k) = c(x_2,...,x_k,x_1) for k = 2..max_arity.

    Arities whose indicator instance exceeds a guard are INCONCLUSIVE; the
    remaining arities are still searched.
    """
    ensure_valid(b)
    if max_arity < 2:
        raise ValueError(f"max_arity must be at least 2, got {max_arity}")
    outcomes: Dict[int, Outcome] = {}
    operations: Dict[int, Operation] = {}
    for k in range(2, max_arity + 1):
        try:
            result = find_special(b, PolymorphismKind.CYCLIC, k, guards=guards)
        except GuardExceededError as e:
            logger.warning("Cyclic search of arity %d stopped: %s", k, e)
            outcomes[k] = Outcome.INCONCLUSIVE
            continue
        outcomes[k] = result.outcome
        if result.found:
            operations[k] = result.operation
    return CyclicProfile(outcomes, operations)
