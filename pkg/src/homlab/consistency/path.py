"""Strong path consistency on binary signatures.

Pair lists are kept in one boolean array ``L`` of shape (n, n, m, m) where
``L[x, y, u, w]`` says that (u, w) is still allowed for the variable pair (x, y).
The composition rule over all middles y is evaluated as a boolean matrix product.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from homlab.consistency.lists import ListsSpec, normalize_lists
from homlab.structures.structure import Structure, check_same_signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairLists:
    """The accepted state of path consistency.

    ``L(x, x)`` only holds diagonal pairs; ``unary(x)`` reads them back as a list.
    """

    array: np.ndarray

    @property
    def n_vars(self) -> int:
        return self.array.shape[0]

    @property
    def domain_size(self) -> int:
        return self.array.shape[2]

    def pairs(self, x: int, y: int) -> FrozenSet[Tuple[int, int]]:
        us, ws = np.nonzero(self.array[x, y])
        return frozenset(zip(us.tolist(), ws.tolist()))

    def unary(self, x: int) -> FrozenSet[int]:
        return frozenset(np.nonzero(np.diagonal(self.array[x, x]))[0].tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairLists):
            return NotImplemented
        return self.array.shape == other.array.shape and bool(np.array_equal(self.array, other.array))

    def __hash__(self) -> int:
        return hash(self.array.tobytes())


def _check_binary(instance: Structure) -> None:
    too_wide = [s for s, arity in instance.signature if arity > 2]
    if too_wide:
        raise ValueError(
            f"Path consistency needs relations of arity at most 2, got {too_wide}; use k_consistency instead"
        )


def initial_pair_lists(instance: Structure, template: Structure, init: ListsSpec = None) -> np.ndarray:
    """Pair lists before propagation: B^2 for non-edges, relations on constrained pairs."""
    check_same_signature(instance, template)
    _check_binary(instance)
    n, m = instance.size, template.size
    lists = normalize_lists(init, n, m)
    state = np.ones((n, n, m, m), dtype=bool)
    identity = np.eye(m, dtype=bool)
    for x in range(n):
        diagonal = identity.copy()
        for u in range(m):
            if u not in lists[x]:
                diagonal[u, u] = False
        state[x, x] = diagonal
    for symbol, arity in instance.signature:
        matrix = np.zeros((m, m), dtype=bool)
        if arity == 1:
            for (u,) in template.relation(symbol):
                matrix[u, u] = True
            for (x,) in instance.relation(symbol):
                state[x, x] &= matrix
            continue
        for u, w in template.relation(symbol):
            matrix[u, w] = True
        for x, y in instance.relation(symbol):
            if x == y:
                state[x, x] &= matrix & identity
            else:
                state[x, y] &= matrix
                state[y, x] &= matrix.T
    return state


def propagate_pairs(state: np.ndarray) -> bool:
    """Apply the composition rule until nothing changes.

    For all x, y, z: (u, w) stays in L(x, z) only if some v has (u, v) in L(x, y)
    and (v, w) in L(y, z). Works in place.

    Returns:
        False iff some pair list became empty
    """
    n, _, m, _ = state.shape
    if n == 0:
        return True
    changed = True
    sweeps = 0
    while changed:
        changed = False
        sweeps += 1
        for y in range(n):
            left = state[:, y].reshape(n * m, m).astype(np.float32)
            right = state[y].transpose(1, 0, 2).reshape(m, n * m).astype(np.float32)
            composed = (left @ right > 0).reshape(n, m, n, m).transpose(0, 2, 1, 3)
            refined = state & composed
            if not np.array_equal(refined, state):
                state[...] = refined
                changed = True
                if not state.reshape(n * n, m * m).any(axis=1).all():
                    logger.debug("Path consistency emptied a pair list after %d sweeps", sweeps)
                    return False
    return bool(state.reshape(n * n, m * m).any(axis=1).all())


def pc(instance: Structure, template: Structure, init: ListsSpec = None) -> Optional[PairLists]:
    """Strong path consistency.

    Args:
        instance: Structure with relations of arity at most 2
        template: Target structure with the same signature
        init: Optional unary lists restricting L(x, x)

    Returns:
        PairLists at the fixed point, or None on rejection

    Raises:
        ValueError: If the signature has a relation of arity above 2
    """
    state = initial_pair_lists(instance, template, init)
    if not propagate_pairs(state):
        return None
    return PairLists(state)
