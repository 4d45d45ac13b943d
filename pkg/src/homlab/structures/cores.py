"""Cores and retractions."""

import logging
from itertools import combinations
from typing import NamedTuple, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.structures.constructions import induced_substructure
from homlab.structures.structure import Mapping, Structure

logger = logging.getLogger(__name__)


class CoreResult(NamedTuple):
    """The core as an induced substructure plus the retraction onto it.

    ``retraction`` is an endomorphism of the original structure whose image is
    ``elements`` and which fixes every element of the image.
    """

    structure: Structure
    retraction: Mapping

    @property
    def elements(self) -> Tuple[int, ...]:
        return tuple(sorted(self.retraction.image))

    def to_core(self) -> Mapping:
        """The retraction as a map onto the renumbered core."""
        position = {e: i for i, e in enumerate(self.elements)}
        return Mapping(tuple(position[v] for v in self.retraction.table), len(position))

    def inclusion(self) -> Mapping:
        """The embedding of the renumbered core into the original structure."""
        return Mapping(self.elements, self.retraction.target_size)


def core(a: Structure, guards: Guards = DEFAULT_GUARDS) -> CoreResult:
    """Compute the core of a.

    Tries candidate images by increasing size and, within a size, in
    lexicographic order of the element set; the first set that carries the
    image of an endomorphism is the core. The endomorphism restricted to that
    set is a permutation, so a suitable power of it is a retraction.

    Raises:
        GuardExceededError: If a.size exceeds max_domain

    Examples:
        >>> from homlab.structures.library import cycle
        >>> core(cycle(6)).elements
        (0, 1)
    """
    from homlab.search import backtracking

    guards.check("max_domain", a.size, "core search")
    n = a.size
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            allowed = frozenset(subset)
            h = backtracking.search_hom(a, a, [allowed] * n)
            if h is None:
                continue
            retraction = _retraction_from(h, subset)
            logger.info("Core of %r has %d of %d elements", a, size, n)
            return CoreResult(induced_substructure(a, subset), retraction)
    raise AssertionError("the identity is always an endomorphism")


def _retraction_from(h: Mapping, subset: Tuple[int, ...]) -> Mapping:
    """Iterate h until it fixes every element of subset (h permutes subset)."""
    r = h
    while any(r[e] != e for e in subset):
        r = r.then(h)
    return r


def is_core(a: Structure, guards: Guards = DEFAULT_GUARDS) -> bool:
    """True iff every endomorphism of a is surjective."""
    from homlab.search import backtracking

    guards.check("max_domain", a.size, "core test")
    full = frozenset(range(a.size))
    for v in a.elements:
        lists = [full - {v}] * a.size
        if backtracking.search_hom(a, a, lists) is not None:
            return False
    return True
