"""Candidate lists: the mutable state of the propagation algorithms.

``UnaryLists`` is a list with one frozenset per instance variable. Algorithms never
mutate a set in place; they replace it, so copying a state is ``list(lists)``.
A rejected state is any empty entry.
"""

from collections.abc import Mapping as MappingType
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Union

UnaryLists = List[FrozenSet[int]]

ListsSpec = Union[None, Sequence[Iterable[int]], MappingType[int, Iterable[int]]]


def full_lists(n_vars: int, domain_size: int) -> UnaryLists:
    full = frozenset(range(domain_size))
    return [full] * n_vars


def normalize_lists(init: ListsSpec, n_vars: int, domain_size: int) -> UnaryLists:
    """Turn None, a sequence or a partial ``{var: values}`` dict into UnaryLists.

    Raises:
        ValueError: If a variable or value is out of range
    """
    lists = full_lists(n_vars, domain_size)
    if init is None:
        return lists
    if isinstance(init, MappingType):
        items = init.items()
    else:
        if len(init) != n_vars:
            raise ValueError(f"Expected {n_vars} lists, got {len(init)}")
        items = enumerate(init)
    for var, values in items:
        if not 0 <= var < n_vars:
            raise ValueError(f"List given for variable {var}, outside 0..{n_vars - 1}")
        allowed = frozenset(values)
        bad = [v for v in allowed if not 0 <= v < domain_size]
        if bad:
            raise ValueError(f"List of variable {var} has values {sorted(bad)} outside 0..{domain_size - 1}")
        lists[var] = lists[var] & allowed
    return lists


def precolouring_lists(precolouring: MappingType[int, int], n_vars: int, domain_size: int) -> UnaryLists:
    return normalize_lists({v: [c] for v, c in precolouring.items()}, n_vars, domain_size)


def is_rejected(lists: Sequence[FrozenSet[int]]) -> bool:
    return any(not allowed for allowed in lists)


def is_subsumed(inner: Sequence[FrozenSet[int]], outer: Sequence[FrozenSet[int]]) -> bool:
    """True iff every list of inner is contained in the matching list of outer."""
    return len(inner) == len(outer) and all(a <= b for a, b in zip(inner, outer))


def format_lists(lists: Optional[Sequence[FrozenSet[int]]]) -> str:
    if lists is None:
        return "REJECT"
    return " ".join(f"{var}:{{{','.join(map(str, sorted(values)))}}}" for var, values in enumerate(lists))


def as_dict(lists: Sequence[FrozenSet[int]]) -> Dict[int, List[int]]:
    return {var: sorted(values) for var, values in enumerate(lists)}
