"""Indicator instances: homomorphism problems whose solutions are polymorphisms.

For a template B and an identity system over symbols f_1..f_r of arities
k_1..k_r, the indicator instance starts from the disjoint union of the powers
B^{k_1}, ..., B^{k_r} (one block per symbol, element ``offset + encode_tuple(args)``
standing for ``f(args)``). Every height-one consequence of an identity merges two
elements, a bare-variable side pins an element to a value, and the idempotent flag
pins every diagonal tuple (u, ..., u) to u. A homomorphism from the quotient to B
respecting the pins is exactly a tuple of polymorphisms satisfying the system.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.consistency.lists import UnaryLists, normalize_lists
from homlab.polymorphisms.identities import IdentitySystem, Term
from homlab.polymorphisms.operation import Operation
from homlab.structures.constructions import disjoint_union, encode_tuple, power, quotient
from homlab.structures.structure import Mapping, Structure, ensure_valid

logger = logging.getLogger(__name__)


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller index stays the root
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass(frozen=True)
class Block:
    symbol: str
    arity: int
    offset: int


@dataclass(frozen=True)
class IndicatorInstance:
    """The precoloured power instance for one template and identity system.

    Attributes:
        instance: Quotient of the power blocks after merging
        lists: One list per instance element; singletons for pinned elements,
            empty lists when pins conflict
        precolouring: Pinned instance elements and their values
        blocks: Where each symbol's block starts among the raw elements
        classes: Instance element of every raw element
        domain_size: Size of the template
    """

    instance: Structure
    lists: UnaryLists
    precolouring: Dict[int, int]
    blocks: Tuple[Block, ...]
    classes: Tuple[int, ...]
    domain_size: int

    @property
    def conflicting(self) -> bool:
        """True iff two pins forced the same element to different values."""
        return any(not allowed for allowed in self.lists)

    def decode(self, solution: Mapping) -> Dict[str, Operation]:
        """Read one operation per symbol off a homomorphism of the instance."""
        n = self.domain_size
        operations = {}
        for block in self.blocks:
            table = tuple(solution[self.classes[block.offset + i]] for i in range(n ** block.arity))
            operations[block.symbol] = Operation(block.arity, n, table, name=block.symbol)
        return operations


def indicator_instance(
    b: Structure,
    system: IdentitySystem,
    idempotent: bool = False,
    guards: Guards = DEFAULT_GUARDS,
) -> IndicatorInstance:
    """Build the indicator instance of b for the identity system.

    Args:
        b: Template structure
        system: Identities over one or more function symbols
        idempotent: Additionally require f(u, ..., u) = u for every symbol
        guards: max_arity bounds each block arity, max_states the block sizes

    Returns:
        IndicatorInstance

    Raises:
        GuardExceededError: If an arity or block size exceeds its cap
    """
    ensure_valid(b)
    if not system.symbols:
        raise ValueError("Identity system declares no function symbols")
    n = b.size
    blocks: List[Block] = []
    offset = 0
    for symbol, arity in system.symbols:
        guards.check("max_arity", arity, f"symbol {symbol}")
        guards.check("max_states", n ** arity, f"elements of B^{arity}")
        blocks.append(Block(symbol, arity, offset))
        offset += n ** arity
    raw_size = offset
    where = {block.symbol: block for block in blocks}
    logger.info(
        "Building indicator instance for %s over %s: %d raw elements",
        system.name or "identities", b.name or f"structure of size {n}", raw_size,
    )

    def element(term: Term, values: Dict[str, int]) -> int:
        block = where[term.symbol]
        return block.offset + encode_tuple([values[a] for a in term.args], n)

    merge = _UnionFind(raw_size)
    pins: List[Tuple[int, int]] = []
    for identity in system.identities:
        variables = identity.variables
        left, right = identity.left, identity.right
        for values in product(range(n), repeat=len(variables)):
            env = dict(zip(variables, values))
            if not left.is_variable and not right.is_variable:
                merge.union(element(left, env), element(right, env))
            elif not left.is_variable:
                pins.append((element(left, env), env[right.args[0]]))
            elif not right.is_variable:
                pins.append((element(right, env), env[left.args[0]]))
    if idempotent:
        for block in blocks:
            for u in range(n):
                pins.append((block.offset + encode_tuple([u] * block.arity, n), u))

    roots = [merge.find(e) for e in range(raw_size)]
    union = None
    for block in blocks:
        block_structure = power(b, block.arity, guards)
        union = block_structure if union is None else disjoint_union(union, block_structure)
    merged, quotient_map = quotient(union, roots)
    merged = merged.renamed(f"indicator({union.name})" if union.name else "indicator")

    allowed: Dict[int, frozenset] = {}
    for raw, value in pins:
        cls = quotient_map[raw]
        allowed[cls] = allowed.get(cls, frozenset(range(n))) & {value}
    lists = normalize_lists(allowed, merged.size, n)
    precolouring = {cls: next(iter(values)) for cls, values in sorted(allowed.items()) if len(values) == 1}
    if any(not values for values in allowed.values()):
        logger.info("Identity pins conflict: the indicator instance has no solution")
    logger.debug("Indicator instance: %d elements after merging, %d pinned", merged.size, len(precolouring))
    return IndicatorInstance(merged, lists, precolouring, tuple(blocks), tuple(quotient_map), n)
