"""Bounded width and tree duality."""

import logging

from homlab.classify.verdict import PropertyVerdict
from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import GuardExceededError
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.search import Outcome, find_special
from homlab.powerset.solvability import ac_solvability
from homlab.structures.constructions import singleton_expansion
from homlab.structures.cores import core
from homlab.structures.structure import Structure, ensure_valid

logger = logging.getLogger(__name__)


def bounded_width(b: Structure, guards: Guards = DEFAULT_GUARDS) -> PropertyVerdict:
    """Decide whether CSP(b) has bounded width, i.e. is solved by singleton arc consistency.

    This holds iff the core with constants has WNU polymorphisms f (ternary) and g
    (4-ary) with f(y,x,x) = g(y,x,x,x).

    Examples:
        >>> from homlab.structures.library import transitive_tournament
        >>> bounded_width(transitive_tournament(3)).holds
        True
    """
    ensure_valid(b)
    try:
        c = core(b, guards)
        result = find_special(singleton_expansion(c.structure), PolymorphismKind.WNU_3_4, guards=guards)
    except GuardExceededError as e:
        return PropertyVerdict(None, f"stopped: {e}", stage="wnu-3-4")
    if result.outcome is Outcome.FOUND:
        return PropertyVerdict(
            True, "3-4 WNU pair of the core with constants", result.operations, core=c, stage="wnu-3-4"
        )
    logger.info("No 3-4 WNU pair for %s", b.name or "the template")
    return PropertyVerdict(
        False, "no 3-4 WNU pair of the core with constants (exhaustive search)", core=c, stage="wnu-3-4"
    )


def tree_duality(b: Structure, guards: Guards = DEFAULT_GUARDS) -> PropertyVerdict:
    """Decide whether arc consistency solves CSP(b), via P(core) -> core."""
    try:
        result = ac_solvability(b, guards)
    except GuardExceededError as e:
        return PropertyVerdict(None, f"stopped: {e}", stage="powerset")
    if result.solvable:
        return PropertyVerdict(True, "P(C) maps to the core C", core=result.core, stage="powerset")
    where = "" if result.blocked_at is None else f" (blocked at element {result.blocked_at})"
    return PropertyVerdict(False, f"P(C) does not map to the core C{where}", core=result.core, stage="powerset")
