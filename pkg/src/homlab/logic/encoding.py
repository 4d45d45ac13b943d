"""The binary encoding C^[d]: an arity-2 structure that carries the CSP of C.

The domain is C^d (tuples numbered by ``encode_tuple``). For each relation R of C
there is a unary symbol ``U_R`` holding the d-tuples whose first arity(R)
coordinates form a tuple of R, and for 1 <= i, j <= d there is a binary symbol
``E_i_j`` holding the pairs (a, b) with a_i = b_j.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.structures.constructions import decode_element, encode_tuple
from homlab.structures.signature import Signature
from homlab.structures.structure import Mapping, Structure, check_same_signature

logger = logging.getLogger(__name__)


def unary_symbol(symbol: str) -> str:
    return f"U_{symbol}"


def matching_symbol(i: int, j: int) -> str:
    """Name of the coordinate-matching relation for 1-based coordinates i and j."""
    return f"E_{i}_{j}"


@dataclass(frozen=True)
class BinaryEncoding:
    """C^[d] together with the instance translation.

    Responsibilities:
    - Translate an instance over C into an equisatisfiable instance over C^[d]
    - Read a solution of the translated instance back as a solution of the original

    Not responsible for:
    - Solving either instance
    """

    source: Structure
    d: int
    structure: Structure

    def translate(self, instance: Structure) -> Structure:
        """Encode an instance over C.

        Every original element x becomes an element forced to a constant tuple
        (a, ..., a) by E_1_j(x, x) for all j. Every constraint R(v_1..v_k) becomes an
        element t with U_R(t) and E_i_1(t, v_i) for i <= k.
        """
        check_same_signature(instance, self.source)
        relations: Dict[str, List[Tuple[int, int]]] = {name: [] for name in self.structure.signature.names}
        for x in instance.elements:
            for j in range(1, self.d + 1):
                relations[matching_symbol(1, j)].append((x, x))
        next_element = instance.size
        for symbol, scope in instance.iter_tuples():
            t = next_element
            next_element += 1
            relations[unary_symbol(symbol)].append((t,))
            for i, v in enumerate(scope, start=1):
                relations[matching_symbol(i, 1)].append((t, v))
        name = f"{instance.name}[{self.d}]" if instance.name else ""
        return Structure(self.structure.signature, next_element, relations, name=name)

    def decode(self, solution: Mapping, original_size: int) -> Mapping:
        """Restrict a solution of a translated instance to the original elements."""
        n = self.source.size
        return Mapping(
            tuple(decode_element(solution[x], n, self.d)[0] for x in range(original_size)), n
        )


def binary_encoding(c: Structure, d: int, guards: Guards = DEFAULT_GUARDS) -> BinaryEncoding:
    """Build C^[d].

    Raises:
        ValueError: If d is below the maximal arity of c
        GuardExceededError: If the encoding would hold more than max_states tuples

    Examples:
        >>> from homlab.structures.library import pss_template
        >>> len(binary_encoding(pss_template(), 3).structure.signature)
        11
    """
    if d < max(1, c.signature.max_arity):
        raise ValueError(f"d must be at least the maximal arity {c.signature.max_arity}, got {d}")
    n = c.size
    size = n ** d
    guards.check("max_states", d * d * n ** (2 * d - 1), f"tuples of the binary encoding [{d}]")
    symbols = [(unary_symbol(s), 1) for s in c.signature.names]
    symbols += [(matching_symbol(i, j), 2) for i in range(1, d + 1) for j in range(1, d + 1)]
    signature = Signature.of(*symbols)

    relations: Dict[str, list] = {}
    elements = [decode_element(e, n, d) for e in range(size)]
    for symbol, arity in c.signature:
        allowed = c.relation(symbol)
        relations[unary_symbol(symbol)] = [(e,) for e, t in enumerate(elements) if t[:arity] in allowed]
    for i, j in product(range(d), repeat=2):
        tuples = []
        for a, ta in enumerate(elements):
            for b_values in product(range(n), repeat=d - 1):
                tb = b_values[:j] + (ta[i],) + b_values[j:]
                tuples.append((a, encode_tuple(tb, n)))
        relations[matching_symbol(i + 1, j + 1)] = tuples
    name = f"{c.name}[{d}]" if c.name else ""
    logger.debug("Binary encoding of size %d with %d symbols", size, len(signature))
    return BinaryEncoding(c, d, Structure(signature, size, relations, name=name))
