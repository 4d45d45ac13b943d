"""Classifiers for undirected graphs and smooth digraphs."""

import logging

from homlab.classify.verdict import Complexity, Verdict, inconclusive
from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import GuardExceededError, VerificationError
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.search import Outcome, find_special
from homlab.structures.cores import core
from homlab.structures.predicates import loop_vertices, odd_cycle, structure_predicates, two_colouring
from homlab.structures.structure import Structure, ensure_valid

logger = logging.getLogger(__name__)


def _require_digraph(h: Structure) -> None:
    ensure_valid(h)
    if not h.is_digraph:
        raise ValueError(f"Expected a digraph, got signature [{h.signature}]")


def hell_nesetril(h: Structure) -> Verdict:
    """H-colouring is in P if H has a loop or is bipartite, and NP-complete otherwise.

    Certificates: a loop vertex, a 2-colouring, or an odd cycle.

    Raises:
        ValueError: If h is not a symmetric digraph

    Examples:
        >>> from homlab.structures.library import cycle
        >>> hell_nesetril(cycle(5)).summary()
        'NP-complete: non-bipartite, loopless'
    """
    _require_digraph(h)
    if not structure_predicates(h).is_symmetric:
        raise ValueError("Hell-Nesetril classification needs an undirected (symmetric) graph")
    loops = loop_vertices(h)
    if loops:
        return Verdict(Complexity.P, f"loop at {loops[0]}", vertices=(loops[0],), stage="graph")
    colouring = two_colouring(h)
    if colouring is not None:
        return Verdict(Complexity.P, "bipartite", colouring=colouring, stage="graph")
    cycle = odd_cycle(h)
    if cycle is None or len(cycle) % 2 == 0:
        raise VerificationError("Non-bipartite graph without an odd cycle")
    return Verdict(Complexity.NP_COMPLETE, "non-bipartite, loopless", vertices=tuple(cycle), stage="graph")


def smooth_digraph(h: Structure, guards: Guards = DEFAULT_GUARDS) -> Verdict:
    """Classify a digraph without sources and sinks.

    CSP(H) is in P when the core of H is a disjoint union of directed cycles and
    NP-complete otherwise. The hard side is backed by a failed search for a
    4-ary Siggers polymorphism of the core with constants.

    Raises:
        ValueError: If h is not a digraph or has a source or a sink
        VerificationError: If a core that is not a union of cycles has a Siggers
            polymorphism
    """
    _require_digraph(h)
    if not structure_predicates(h).is_smooth:
        raise ValueError("The digraph has a source or a sink")
    try:
        c = core(h, guards)
    except GuardExceededError as e:
        return inconclusive("core", e)
    shape = structure_predicates(c.structure)
    if shape.is_disjoint_union_of_directed_cycles:
        return Verdict(Complexity.P, "core is a disjoint union of directed cycles", core=c, stage="core")
    try:
        result = find_special(c.structure, PolymorphismKind.SIGGERS_4, idempotent=True, guards=guards)
    except GuardExceededError as e:
        return inconclusive("siggers", e)
    if result.outcome is Outcome.FOUND:
        raise VerificationError("A smooth core that is not a union of cycles has a Siggers polymorphism")
    logger.info("Smooth core of size %d is not a union of directed cycles", c.structure.size)
    return Verdict(
        Complexity.NP_COMPLETE,
        "core is not a disjoint union of directed cycles; no idempotent Siggers polymorphism",
        core=c,
        stage="siggers",
    )
