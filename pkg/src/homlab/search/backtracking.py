"""Backtracking homomorphism search with maintained arc consistency."""

import logging
from typing import Iterator, List, Optional

from homlab.consistency.lists import ListsSpec, UnaryLists
from homlab.consistency.network import ConstraintNetwork
from homlab.errors import VerificationError
from homlab.search.trace import TraceNode
from homlab.structures.structure import Mapping, Structure, is_homomorphism

logger = logging.getLogger(__name__)


def _choose_variable(lists: UnaryLists) -> Optional[int]:
    """Smallest open list first, ties by index; None when every list is a singleton."""
    best, best_size = None, None
    for var, allowed in enumerate(lists):
        size = len(allowed)
        if size > 1 and (best_size is None or size < best_size):
            best, best_size = var, size
            if size == 2:
                break
    return best


def _enforce_injective(network: ConstraintNetwork, lists: UnaryLists) -> bool:
    """Forward checking for injectivity: a pinned value disappears from all other lists."""
    done = set()
    while True:
        pinned = [(var, next(iter(allowed))) for var, allowed in enumerate(lists) if len(allowed) == 1]
        values = [value for _, value in pinned]
        if len(values) != len(set(values)):
            return False
        fresh = [(var, value) for var, value in pinned if var not in done]
        if not fresh:
            return True
        changed = []
        for var, value in fresh:
            done.add(var)
            for other, allowed in enumerate(lists):
                if other != var and value in allowed:
                    lists[other] = allowed - {value}
                    changed.append(other)
        if changed and not network.propagate(lists, changed=changed):
            return False


def _settle(network: ConstraintNetwork, lists: UnaryLists, changed, injective: bool) -> bool:
    if not network.propagate(lists, changed=changed):
        return False
    return not injective or _enforce_injective(network, lists)


def iter_homomorphisms(
    instance: Structure,
    template: Structure,
    init: ListsSpec = None,
    *,
    injective: bool = False,
    limit: Optional[int] = None,
    trace: Optional[TraceNode] = None,
) -> Iterator[Mapping]:
    """Enumerate homomorphisms instance -> template respecting init.

    Depth-first search with arc consistency re-established after every pin,
    starting from the previous fixed point. Variables are chosen smallest list
    first (ties by index), values in ascending order, so solutions come out in a
    fixed order and the first one is the least under that order.

    Args:
        instance: Source structure
        template: Target structure with the same signature
        init: Optional lists (sequence or partial dict)
        injective: Only yield injective homomorphisms
        limit: Stop after this many solutions
        trace: Optional TraceNode receiving one child per decision

    Yields:
        Verified homomorphisms as Mapping objects
    """
    network = ConstraintNetwork(instance, template)
    initial = network.initial_lists(init)
    reference = list(initial)
    if injective and instance.size > template.size:
        return
    if not _settle(network, initial, None, injective):
        return

    produced = 0
    # stack entries: (lists, variable, remaining values, trace node of this level)
    stack: List[tuple] = []

    def open_level(lists: UnaryLists, node: Optional[TraceNode]):
        var = _choose_variable(lists)
        if var is None:
            return None
        return (lists, var, sorted(lists[var]), node)

    level = open_level(initial, trace)
    if level is None:
        yield _verified(initial, instance, template, reference, trace)
        return
    stack.append(level)

    while stack:
        lists, var, values, node = stack[-1]
        if not values:
            stack.pop()
            continue
        value = values.pop(0)
        child = list(lists)
        child[var] = frozenset({value})
        ok = _settle(network, child, [var], injective)
        child_node = node.record(var, value, "ok" if ok else "fail") if node is not None else None
        if not ok:
            continue
        nxt = open_level(child, child_node)
        if nxt is not None:
            stack.append(nxt)
            continue
        if child_node is not None:
            child_node.outcome = "solution"
        yield _verified(child, instance, template, reference, trace)
        produced += 1
        if limit is not None and produced >= limit:
            return


def _verified(lists: UnaryLists, instance: Structure, template: Structure, reference, trace) -> Mapping:
    mapping = Mapping(tuple(next(iter(allowed)) for allowed in lists), template.size)
    if not is_homomorphism(mapping, instance, template, reference):
        raise VerificationError(f"Search produced a non-homomorphism {mapping.table}")
    return mapping


def search_hom(
    instance: Structure,
    template: Structure,
    init: ListsSpec = None,
    *,
    trace: Optional[TraceNode] = None,
) -> Optional[Mapping]:
    """Find a homomorphism instance -> template respecting init, or None.

    Examples:
        >>> from homlab.structures.library import complete_graph, cycle
        >>> search_hom(cycle(5), complete_graph(3)).table
        (0, 1, 0, 1, 2)
    """
    return next(iter_homomorphisms(instance, template, init, trace=trace), None)


def homomorphically_equivalent(a: Structure, b: Structure) -> bool:
    """a -> b and b -> a; equivalent structures have isomorphic cores and the same CSP."""
    return search_hom(a, b) is not None and search_hom(b, a) is not None
