"""Constructions on structures: products, powers, unions, substructures, quotients.

Element encoding is fixed because powerset and indicator code decode it:
a pair (i, j) of ``direct_product(a, b)`` is element ``i * b.size + j`` and a
k-tuple of ``power(a, k)`` is its base-``a.size`` numeral, first coordinate most
significant.
"""

import logging
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.structures.signature import Signature
from homlab.structures.structure import Mapping, Structure, check_same_signature

logger = logging.getLogger(__name__)


def encode_tuple(values: Sequence[int], base: int) -> int:
    """Positional index of a tuple in ``power(a, len(values))``."""
    index = 0
    for v in values:
        index = index * base + v
    return index


def decode_element(index: int, base: int, length: int) -> Tuple[int, ...]:
    """Inverse of ``encode_tuple``."""
    digits = [0] * length
    for position in range(length - 1, -1, -1):
        index, digits[position] = divmod(index, base)
    return tuple(digits)


def _require_nonempty(*structures: Structure) -> None:
    for s in structures:
        if s.size < 1:
            raise ValueError("Structures with an empty domain are not supported")


def direct_product(a: Structure, b: Structure) -> Structure:
    """Direct product with pairs flattened as ``i * b.size + j``.

    Examples:
        >>> from homlab.structures.library import complete_graph
        >>> sorted(direct_product(complete_graph(2), complete_graph(2)).edges)
        [(0, 3), (1, 2), (2, 1), (3, 0)]
    """
    check_same_signature(a, b)
    _require_nonempty(a, b)
    relations = {}
    for symbol in a.signature.names:
        relations[symbol] = [
            tuple(x * b.size + y for x, y in zip(s, t))
            for s in a.relation(symbol)
            for t in b.relation(symbol)
        ]
    return Structure(a.signature, a.size * b.size, relations, name=_joined(a, b, "x"))


def power(a: Structure, k: int, guards: Guards = DEFAULT_GUARDS) -> Structure:
    """The k-th direct power of a.

    Raises:
        ValueError: If k < 1
        GuardExceededError: If the number of product tuples exceeds max_states
    """
    if k < 1:
        raise ValueError(f"Power exponent must be positive, got {k}")
    _require_nonempty(a)
    guards.check("max_states", sum(len(r) ** k for r in a.relations.values()), f"tuples of power {k}")
    n = a.size
    relations = {}
    for symbol, arity in a.signature:
        base = a.sorted_relation(symbol)
        partial: List[Tuple[int, ...]] = [tuple([0] * arity)]
        for _ in range(k):
            partial = [tuple(p[i] * n + t[i] for i in range(arity)) for p in partial for t in base]
        relations[symbol] = partial
    name = f"{a.name}^{k}" if a.name else ""
    return Structure(a.signature, n ** k, relations, name=name)


def projection_mapping(n: int, k: int, coordinate: int) -> Mapping:
    """The projection of ``power(a, k)`` (a of size n) onto a 0-based coordinate."""
    if not 0 <= coordinate < k:
        raise ValueError(f"Coordinate {coordinate} out of range for power {k}")
    return Mapping(tuple(decode_element(e, n, k)[coordinate] for e in range(n ** k)), n)


def disjoint_union(a: Structure, b: Structure) -> Structure:
    """Disjoint union; b's elements are shifted by a.size."""
    check_same_signature(a, b)
    _require_nonempty(a, b)
    shift = a.size
    relations = {
        symbol: list(a.relation(symbol)) + [tuple(v + shift for v in t) for t in b.relation(symbol)]
        for symbol in a.signature.names
    }
    return Structure(a.signature, a.size + b.size, relations, name=_joined(a, b, "+"))


def induced_substructure(a: Structure, elems: Iterable[int]) -> Structure:
    """Substructure induced by elems, renumbered in increasing order."""
    chosen = sorted(set(elems))
    if not chosen:
        raise ValueError("Cannot induce a substructure on an empty element set")
    for e in chosen:
        if not 0 <= e < a.size:
            raise ValueError(f"Element {e} out of range 0..{a.size - 1}")
    position = {e: i for i, e in enumerate(chosen)}
    relations = {
        symbol: [tuple(position[v] for v in t) for t in a.relation(symbol) if all(v in position for v in t)]
        for symbol in a.signature.names
    }
    return Structure(a.signature, len(chosen), relations, name=a.name)


def quotient(a: Structure, labels: Sequence[object]) -> Tuple[Structure, Mapping]:
    """Merge elements carrying equal labels.

    Classes are numbered by their smallest member, so the quotient map is
    order-preserving on class representatives.

    Args:
        a: Structure to collapse
        labels: One hashable label per element of a

    Returns:
        (quotient structure, quotient map from a onto it)
    """
    if len(labels) != a.size:
        raise ValueError(f"Expected {a.size} labels, got {len(labels)}")
    numbering: Dict[object, int] = {}
    table = []
    for label in labels:
        if label not in numbering:
            numbering[label] = len(numbering)
        table.append(numbering[label])
    q = Mapping(tuple(table), len(numbering))
    relations = {
        symbol: [tuple(table[v] for v in t) for t in a.relation(symbol)]
        for symbol in a.signature.names
    }
    return Structure(a.signature, q.target_size, relations, name=a.name), q


def contract(g: Structure, u: int, v: int) -> Structure:
    """Contract u and v into one vertex that inherits all their in- and out-edges."""
    if u == v:
        raise ValueError(f"Cannot contract a vertex with itself ({u})")
    for w in (u, v):
        if not 0 <= w < g.size:
            raise ValueError(f"Vertex {w} out of range 0..{g.size - 1}")
    keep = min(u, v)
    labels = [keep if w in (u, v) else w for w in g.elements]
    contracted, _ = quotient(g, labels)
    return contracted


def singleton_expansion(b: Structure, prefix: str = "C") -> Structure:
    """Expand b by the unary relation {a} for every element a."""
    names = [f"{prefix}{a}" for a in b.elements]
    clash = set(names) & set(b.signature.names)
    if clash:
        raise ValueError(f"Singleton symbols {sorted(clash)} already used in [{b.signature}]")
    signature = b.signature.extended((name, 1) for name in names)
    relations = dict(b.relations)
    relations.update({name: [(a,)] for a, name in enumerate(names)})
    name = f"{b.name}+consts" if b.name else ""
    return Structure(signature, b.size, relations, name=name)


def reduct(b: Structure, symbols: Iterable[str]) -> Structure:
    """Forget every relation not listed in symbols."""
    signature = b.signature.restricted(symbols)
    return Structure(signature, b.size, {s: b.relation(s) for s in signature.names}, name=b.name)


def expand(b: Structure, extra: Dict[str, Tuple[int, Iterable[Sequence[int]]]]) -> Structure:
    """Add relations given as ``{name: (arity, tuples)}``."""
    signature = b.signature.extended((name, arity) for name, (arity, _) in extra.items())
    relations = dict(b.relations)
    relations.update({name: tuples for name, (_, tuples) in extra.items()})
    return Structure(signature, b.size, relations, name=b.name)


def all_tuples(n: int, k: int) -> Iterable[Tuple[int, ...]]:
    """All k-tuples over 0..n-1 in lexicographic order (= index order of power)."""
    return product(range(n), repeat=k)


def _joined(a: Structure, b: Structure, op: str) -> str:
    if a.name and b.name:
        return f"{a.name}{op}{b.name}"
    return ""


def total_structure(signature: Signature, size: int = 1) -> Structure:
    """The structure in which every relation holds for all tuples."""
    return Structure(
        signature, size, {name: list(all_tuples(size, arity)) for name, arity in signature}
    )


def relabel(a: Structure, permutation: Optional[Sequence[int]] = None) -> Structure:
    """Apply a bijection of the domain to every tuple."""
    if permutation is None:
        return a
    if sorted(permutation) != list(range(a.size)):
        raise ValueError("relabel expects a permutation of the domain")
    relations = {
        symbol: [tuple(permutation[v] for v in t) for t in a.relation(symbol)]
        for symbol in a.signature.names
    }
    return Structure(a.signature, a.size, relations, name=a.name)
