"""Propagation algorithms: arc, path, (k-1, k) and singleton arc consistency."""

from homlab.consistency.lists import (
    UnaryLists,
    format_lists,
    full_lists,
    is_rejected,
    is_subsumed,
    normalize_lists,
    precolouring_lists,
)
from homlab.consistency.network import Constraint, ConstraintNetwork
from homlab.consistency.arc import ac
from homlab.consistency.path import PairLists, pc
from homlab.consistency.kcons import k_consistency
from homlab.consistency.singleton import sac

__all__ = [
    "UnaryLists",
    "format_lists",
    "full_lists",
    "is_rejected",
    "is_subsumed",
    "normalize_lists",
    "precolouring_lists",
    "Constraint",
    "ConstraintNetwork",
    "ac",
    "PairLists",
    "pc",
    "k_consistency",
    "sac",
]
