"""Searching for polymorphisms that satisfy identities.

Everything here is a homomorphism search on an indicator instance, so an absent
verdict is a proof: the backtracking search is complete.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, Optional

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import VerificationError
from homlab.polymorphisms.conditions import PolymorphismKind, commutative_idempotent, condition
from homlab.polymorphisms.identities import IdentitySystem, check_identities
from homlab.polymorphisms.indicator import indicator_instance
from homlab.polymorphisms.operation import Operation, is_polymorphism
from homlab.search.backtracking import iter_homomorphisms
from homlab.search.trace import TraceNode
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


class Outcome(str, Enum):
    FOUND = "found"
    ABSENT = "absent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PolymorphismResult:
    """Verdict of a named polymorphism search.

    ``operations`` is filled only when the outcome is FOUND.
    """

    outcome: Outcome
    system: IdentitySystem
    operations: Dict[str, Operation] = field(default_factory=dict)
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    @property
    def operation(self) -> Optional[Operation]:
        """The operation of the first declared symbol, if found."""
        if not self.operations:
            return None
        return self.operations[self.system.symbols[0][0]]


def verify_assignment(
    operations: Dict[str, Operation], b: Structure, system: IdentitySystem, idempotent: bool = False
) -> None:
    """Re-check a produced assignment.

    Raises:
        VerificationError: If some operation is not a polymorphism of b, an identity
            fails, or idempotence was requested and fails
    """
    for symbol, op in operations.items():
        if not is_polymorphism(op, b):
            raise VerificationError(f"Operation {symbol} is not a polymorphism of {b.name or 'the template'}")
        if idempotent and not op.is_idempotent():
            raise VerificationError(f"Operation {symbol} is not idempotent")
    if not check_identities(operations, system):
        raise VerificationError(f"Operations do not satisfy {system.name or system}")


def iter_solutions(
    b: Structure,
    system: IdentitySystem,
    idempotent: bool = False,
    *,
    guards: Guards = DEFAULT_GUARDS,
    limit: Optional[int] = None,
    trace: Optional[TraceNode] = None,
) -> Iterator[Dict[str, Operation]]:
    """Enumerate all assignments of polymorphisms satisfying the system.

    Assignments come out in the fixed order of the backtracking search.
    """
    indicator = indicator_instance(b, system, idempotent, guards)
    if indicator.conflicting:
        return
    for solution in iter_homomorphisms(indicator.instance, b, indicator.lists, limit=limit, trace=trace):
        operations = indicator.decode(solution)
        verify_assignment(operations, b, system, idempotent)
        yield operations


def find_polymorphism(
    b: Structure,
    system: IdentitySystem,
    idempotent: bool = False,
    *,
    guards: Guards = DEFAULT_GUARDS,
    trace: Optional[TraceNode] = None,
) -> Optional[Dict[str, Operation]]:
    """Find polymorphisms of b satisfying the identity system.

    Args:
        b: Template structure
        system: Linear identities over one or more function symbols
        idempotent: Require every operation to be idempotent
        guards: Caps for the indicator instance
        trace: Optional TraceNode receiving the search decisions

    Returns:
        A verified {symbol: Operation} map, or None if no assignment exists

    Raises:
        GuardExceededError: If the indicator instance is too large

    Examples:
        >>> from homlab.structures.library import transitive_tournament
        >>> from homlab.polymorphisms.conditions import majority
        >>> find_polymorphism(transitive_tournament(3), majority()) is not None
        True
    """
    return next(iter_solutions(b, system, idempotent, guards=guards, limit=1, trace=trace), None)


def iter_polymorphisms(
    b: Structure,
    arity: int,
    idempotent: bool = False,
    *,
    guards: Guards = DEFAULT_GUARDS,
    limit: Optional[int] = None,
) -> Iterator[Operation]:
    """All polymorphisms of b of the given arity, in search order."""
    system = IdentitySystem((("f", arity),), (), f"pol-{arity}")
    for operations in iter_solutions(b, system, idempotent, guards=guards, limit=limit):
        yield operations["f"]


def is_associative(f: Operation) -> bool:
    n = f.domain_size
    return all(f(f(x, y), z) == f(x, f(y, z)) for x in range(n) for y in range(n) for z in range(n))


def _find_semilattice(b: Structure, guards: Guards) -> PolymorphismResult:
    """Enumerate commutative idempotent binary polymorphisms, keep the first associative one."""
    system = commutative_idempotent()
    checked = 0
    for operations in iter_solutions(b, system, True, guards=guards, limit=guards.max_solutions):
        checked += 1
        if is_associative(operations["f"]):
            return PolymorphismResult(Outcome.FOUND, system, operations, f"associative after {checked} candidates")
    if checked >= guards.max_solutions:
        return PolymorphismResult(
            Outcome.INCONCLUSIVE,
            system,
            reason=(
                f"{checked} commutative idempotent candidates, none associative, enumeration capped; "
                "ac_solvability decides the related tree-duality question"
            ),
        )
    return PolymorphismResult(Outcome.ABSENT, system, reason=f"none of {checked} candidates is associative")


def find_special(
    b: Structure,
    kind: PolymorphismKind,
    arity: Optional[int] = None,
    idempotent: bool = False,
    *,
    guards: Guards = DEFAULT_GUARDS,
) -> PolymorphismResult:
    """Search for a polymorphism of a named kind.

    Semilattice operations are found in two stages: commutative idempotent binary
    polymorphisms are enumerated (up to guards.max_solutions) and each is tested
    for associativity. Running out of candidates is ABSENT; hitting the cap is
    INCONCLUSIVE. Every other kind is a single indicator search.

    Args:
        b: Template structure
        kind: Which condition
        arity: Arity for totally symmetric, cyclic, WNU and NU conditions
        idempotent: Require idempotent operations
        guards: Caps

    Returns:
        PolymorphismResult
    """
    kind = PolymorphismKind(kind)
    if kind is PolymorphismKind.SEMILATTICE:
        return _find_semilattice(b, guards)
    system = condition(kind, arity)
    operations = find_polymorphism(b, system, idempotent, guards=guards)
    if operations is None:
        logger.info("No %s polymorphism of %s", system.name, b.name or "the template")
        return PolymorphismResult(Outcome.ABSENT, system, reason="exhaustive indicator search")
    return PolymorphismResult(Outcome.FOUND, system, operations, "indicator search")


def satisfies(f: Operation, kind: PolymorphismKind, arity: Optional[int] = None) -> bool:
    """True iff the single operation f meets the named condition."""
    kind = PolymorphismKind(kind)
    if kind is PolymorphismKind.SEMILATTICE:
        return f.arity == 2 and f.is_idempotent() and is_associative(f) and all(
            f(x, y) == f(y, x) for x in range(f.domain_size) for y in range(f.domain_size)
        )
    if kind in (PolymorphismKind.WNU_3_4, PolymorphismKind.PQ):
        raise ValueError(f"Condition '{kind.value}' involves two operations")
    system = condition(kind, arity if arity is not None else f.arity)
    if system.symbols[0][1] != f.arity:
        return False
    return check_identities({system.symbols[0][0]: f}, system)
