"""Decision oracles for the precoloured CSP and the factory that builds them."""

import logging
from typing import Callable, Dict, Protocol

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.consistency.arc import ac
from homlab.consistency.kcons import k_consistency
from homlab.consistency.lists import UnaryLists
from homlab.consistency.path import pc
from homlab.consistency.singleton import sac
from homlab.search.backtracking import search_hom
from homlab.search.brute_force import brute_force_hom
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


class DecisionOracle(Protocol):
    """Anything that decides whether a homomorphism respecting lists exists.

    Implementations may be incomplete (accept unsatisfiable inputs); they must be
    sound for rejection.
    """

    name: str

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        """Return True to accept the instance under the given lists."""
        ...


class ArcConsistencyOracle:
    name = "ac"

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return ac(instance, template, lists) is not None


class SingletonArcConsistencyOracle:
    name = "sac"

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return sac(instance, template, lists) is not None


class PathConsistencyOracle:
    name = "pc"

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return pc(instance, template, lists) is not None


class KConsistencyOracle:
    def __init__(self, k: int = 3):
        self.k = k
        self.name = f"k{k}"

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return k_consistency(instance, template, self.k, lists)


class SearchOracle:
    name = "search"

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return search_hom(instance, template, lists) is not None


class BruteForceOracle:
    name = "brute"

    def __init__(self, guards: Guards = DEFAULT_GUARDS):
        self.guards = guards

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        return brute_force_hom(instance, template, lists, self.guards) is not None


class CountingOracle:
    """Wraps an oracle and counts its invocations."""

    def __init__(self, inner: DecisionOracle):
        self.inner = inner
        self.name = inner.name
        self.calls = 0

    def decide(self, instance: Structure, template: Structure, lists: UnaryLists) -> bool:
        self.calls += 1
        return self.inner.decide(instance, template, lists)


class OracleFactory:
    """Creates decision oracles by name.

    Path consistency only handles relations of arity at most 2; for wider
    templates the factory falls back to 3-consistency and warns once.
    """

    _warned = False
    _builders: Dict[str, Callable[[Guards], DecisionOracle]] = {
        "ac": lambda guards: ArcConsistencyOracle(),
        "sac": lambda guards: SingletonArcConsistencyOracle(),
        "pc": lambda guards: PathConsistencyOracle(),
        "search": lambda guards: SearchOracle(),
        "brute": lambda guards: BruteForceOracle(guards),
    }

    @classmethod
    def names(cls):
        return sorted(cls._builders) + ["k<k>"]

    @classmethod
    def create(cls, name: str, template: Structure = None, guards: Guards = DEFAULT_GUARDS) -> DecisionOracle:
        """Create the oracle called name ('ac', 'sac', 'pc', 'k3', 'search', 'brute').

        Args:
            name: Oracle name
            template: Optional template, used to pick a fallback for 'pc'
            guards: Guards handed to oracles that need them

        Raises:
            ValueError: For unknown names
        """
        if name.startswith("k") and name[1:].isdigit():
            return KConsistencyOracle(int(name[1:]))
        if name == "pc" and template is not None and template.signature.max_arity > 2:
            if not cls._warned:
                logger.warning(
                    "Path consistency needs arity <= 2 but the template has arity %d. "
                    "Falling back to 3-consistency.",
                    template.signature.max_arity,
                )
                cls._warned = True
            return KConsistencyOracle(3)
        try:
            return cls._builders[name](guards)
        except KeyError:
            raise ValueError(f"Unknown oracle '{name}', expected one of {cls.names()}") from None
