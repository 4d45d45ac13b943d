"""Deciding whether arc consistency solves CSP(B), and totally symmetric polymorphisms."""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Optional

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.consistency.arc import ac
from homlab.errors import VerificationError
from homlab.polymorphisms.conditions import totally_symmetric
from homlab.polymorphisms.identities import check_identities
from homlab.polymorphisms.operation import Operation, is_polymorphism
from homlab.powerset.structure import element_of, powerset_structure, singleton
from homlab.search.trace import TraceNode
from homlab.structures.cores import CoreResult, core
from homlab.structures.structure import Mapping, Structure, is_homomorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolvabilityResult:
    """Outcome of the tree-duality decision.

    Attributes:
        solvable: True iff P(core) maps to the core
        core: The core the decision was made for
        homomorphism: P(core) -> core when solvable
        trace: The pin-and-propagate trace
        blocked_at: Element of P(core) that admitted no value, when the pin loop died
    """

    solvable: bool
    core: CoreResult
    homomorphism: Optional[Mapping]
    trace: TraceNode
    blocked_at: Optional[int] = None


def ac_solvability(b: Structure, guards: Guards = DEFAULT_GUARDS) -> SolvabilityResult:
    """Decide whether P(core(b)) maps homomorphically to core(b).

    This holds iff arc consistency solves CSP(b), i.e. iff b has tree duality.
    The core C is computed first. Every singleton {u} of P(C) is pinned to u, which
    loses nothing because C is a core. Then every element of P(C) is pinned in
    order to the first value arc consistency still accepts. Whatever the loop
    produces is verified, so a positive answer always carries a homomorphism.

    Args:
        b: Template structure
        guards: max_domain for the core, max_powerset_domain for P(C)

    Returns:
        SolvabilityResult

    Raises:
        GuardExceededError: If the core or powerset guards are exceeded
    """
    c = core(b, guards)
    target = c.structure
    p = powerset_structure(target, guards)
    trace = TraceNode.root(f"ac-solvability({b.name})" if b.name else "ac-solvability")
    pins = {singleton(u): [u] for u in target.elements}
    lists = ac(p, target, pins)
    if lists is None:
        logger.info("Arc consistency rejects P(C) -> C with singletons pinned")
        return SolvabilityResult(False, c, None, trace)
    for x in p.elements:
        if len(lists[x]) == 1:
            continue
        for u in sorted(lists[x]):
            trial = list(lists)
            trial[x] = frozenset({u})
            refined = ac(p, target, trial)
            trace.record(x, u, "kept" if refined is not None else "fail")
            if refined is not None:
                lists = refined
                break
        else:
            logger.info("No value survives for element %d of P(C)", x)
            return SolvabilityResult(False, c, None, trace, blocked_at=x)
    h = Mapping(tuple(next(iter(allowed)) for allowed in lists), target.size)
    if not is_homomorphism(h, p, target):
        logger.info("Pin loop ended in a map that is not a homomorphism")
        return SolvabilityResult(False, c, None, trace)
    return SolvabilityResult(True, c, h, trace)


def extract_totally_symmetric(b: Structure, hom: Mapping, k: int, guards: Guards = DEFAULT_GUARDS) -> Operation:
    """f(x_1, ..., x_k) := hom({x_1, ..., x_k}) for a homomorphism hom: P(b) -> b.

    Raises:
        ValueError: If hom is not a homomorphism P(b) -> b or k < 1
        VerificationError: If the result fails the polymorphism or symmetry check
    """
    if k < 1:
        raise ValueError(f"Arity must be positive, got {k}")
    p = powerset_structure(b, guards)
    if not is_homomorphism(hom, p, b):
        raise ValueError("The given map is not a homomorphism from P(B) to B")
    table = tuple(hom[element_of(args)] for args in product(range(b.size), repeat=k))
    f = Operation(k, b.size, table, name=f"ts{k}")
    _verify_totally_symmetric(f, b)
    return f


def _verify_totally_symmetric(f: Operation, b: Structure) -> None:
    if not is_polymorphism(f, b):
        raise VerificationError(f"{f.label} is not a polymorphism")
    if f.arity > 1 and not check_identities({"f": f}, totally_symmetric(f.arity)):
        raise VerificationError(f"{f.label} is not totally symmetric")


def totally_symmetric_polymorphism(b: Structure, k: int, guards: Guards = DEFAULT_GUARDS) -> Optional[Operation]:
    """A k-ary totally symmetric polymorphism of b obtained through the powerset, or None.

    Composes the retraction onto the core, the map P(C) -> C read on argument sets,
    and the inclusion of the core. None means b has no tree duality; b may still
    have totally symmetric polymorphisms of small arity.
    """
    result = ac_solvability(b, guards)
    if not result.solvable:
        return None
    c = result.core
    on_core = extract_totally_symmetric(c.structure, result.homomorphism, k, guards)
    to_core, inclusion = c.to_core(), c.inclusion()
    table = tuple(
        inclusion[on_core(*(to_core[x] for x in args))] for args in product(range(b.size), repeat=k)
    )
    f = Operation(k, b.size, table, name=f"ts{k}")
    _verify_totally_symmetric(f, b)
    return f
