"""The general complexity decision: core, constants, then a Siggers polymorphism."""

import logging

from homlab.classify.verdict import Complexity, Verdict, inconclusive
from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import GuardExceededError
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.search import Outcome, find_special
from homlab.structures.constructions import singleton_expansion
from homlab.structures.cores import core
from homlab.structures.structure import Structure, ensure_valid

logger = logging.getLogger(__name__)


def dichotomy(b: Structure, guards: Guards = DEFAULT_GUARDS) -> Verdict:
    """Decide whether CSP(b) is in P or NP-complete.

    The core C of b is computed and expanded by all constants; CSP(b) is in P iff
    that expansion has a 4-ary Siggers polymorphism s(x,x,y,z) = s(y,z,z,x). The
    search is exhaustive, so a failed search is a proof of hardness. A guard
    overrun at any stage gives an inconclusive verdict naming the stage.

    Args:
        b: Template structure
        guards: Caps for the core and the indicator search

    Returns:
        Verdict with the Siggers operation (P) or the exhausted search (NP-complete)

    Examples:
        >>> from homlab.structures.library import directed_cycle
        >>> dichotomy(directed_cycle(3)).complexity.value
        'P'
    """
    ensure_valid(b)
    try:
        c = core(b, guards)
    except GuardExceededError as e:
        return inconclusive("core", e)
    expanded = singleton_expansion(c.structure)
    logger.info("Core of %s has %d elements", b.name or "the template", c.structure.size)
    try:
        result = find_special(expanded, PolymorphismKind.SIGGERS_4, guards=guards)
    except GuardExceededError as e:
        return inconclusive("siggers", e)
    if result.outcome is Outcome.FOUND:
        return Verdict(
            Complexity.P,
            "Siggers polymorphism of the core with constants",
            result.operations,
            core=c,
            stage="siggers",
        )
    return Verdict(
        Complexity.NP_COMPLETE,
        "no Siggers polymorphism of the core with constants (exhaustive search)",
        core=c,
        stage="siggers",
    )
