"""Building solutions from a decision oracle by pinning variables one at a time."""

import logging
from typing import Optional

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.consistency.lists import ListsSpec, normalize_lists
from homlab.errors import OracleInconsistencyError
from homlab.search.oracles import DecisionOracle
from homlab.search.trace import TraceNode
from homlab.structures.cores import core
from homlab.structures.structure import Mapping, Structure, is_homomorphism

logger = logging.getLogger(__name__)


def construct_solution(
    instance: Structure,
    template: Structure,
    oracle: DecisionOracle,
    init: ListsSpec = None,
    *,
    guards: Guards = DEFAULT_GUARDS,
    trace: Optional[TraceNode] = None,
) -> Optional[Mapping]:
    """Turn a decision procedure into a search procedure.

    Without lists the template is replaced by its core C; with lists the template
    itself is used, since lists may name elements outside the core. The oracle is
    asked once for the unpinned instance; then every variable in turn is pinned to
    the first element the oracle still accepts. At most 1 + |variables| * |C| calls
    are made.

    Args:
        instance: Instance structure
        template: Template structure
        oracle: Decides the precoloured CSP of the core
        init: Optional lists over template elements
        guards: Caps for the core computation
        trace: Optional TraceNode receiving each pin attempt

    Returns:
        A verified homomorphism into template, or None if the oracle rejects

    Raises:
        OracleInconsistencyError: If the oracle accepted but no pin extends, or the
            fully pinned assignment is not a homomorphism
    """
    target_lists = normalize_lists(init, instance.size, template.size)
    if init is None:
        result = core(template, guards)
        core_structure, elements = result.structure, result.elements
        lists = normalize_lists(None, instance.size, core_structure.size)
    else:
        # lists name template elements, which the core may not contain
        core_structure, elements = template, tuple(range(template.size))
        lists = target_lists

    if not oracle.decide(instance, core_structure, lists):
        return None
    for var in range(instance.size):
        for value in sorted(lists[var]):
            trial = list(lists)
            trial[var] = frozenset({value})
            accepted = oracle.decide(instance, core_structure, trial)
            if trace is not None:
                trace.record(var, elements[value], "kept" if accepted else "fail")
            if accepted:
                lists = trial
                break
        else:
            raise OracleInconsistencyError(
                f"Oracle '{oracle.name}' accepted but rejects every value for variable {var}"
            )
    mapping = Mapping(tuple(elements[next(iter(allowed))] for allowed in lists), template.size)
    if not is_homomorphism(mapping, instance, template, target_lists):
        raise OracleInconsistencyError(
            f"Oracle '{oracle.name}' accepted a full assignment that is not a homomorphism"
        )
    return mapping
