"""Finite relational structures, mappings between them, and validation."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping as MappingType, Optional, Sequence, Tuple

from homlab.errors import SignatureMismatchError
from homlab.structures.signature import DIGRAPH, Signature

Tuples = FrozenSet[Tuple[int, ...]]


class Structure:
    """A finite relational structure with domain 0..size-1.

    Relations are stored as frozensets of tuples, so duplicates cannot occur and
    two structures are equal when their signatures, sizes and tuple sets agree.
    The constructor does not check tuple contents; call ``validate`` (or
    ``ensure_valid``) for that.

    Responsibilities:
    - Hold the signature, the domain size and one tuple set per symbol
    - Provide deterministic iteration over relations and tuples

    Not responsible for:
    - Constructions such as products or quotients (see constructions)
    - Homomorphism search (see homlab.search)
    """

    def __init__(
        self,
        signature: Signature,
        size: int,
        relations: Optional[MappingType[str, Iterable[Sequence[int]]]] = None,
        name: str = "",
    ) -> None:
        self.signature = signature
        self.size = int(size)
        self.name = name
        relations = dict(relations or {})
        unknown = set(relations) - set(signature.names)
        if unknown:
            raise SignatureMismatchError(
                f"Relations {sorted(unknown)} are not declared in signature [{signature}]"
            )
        self._relations: Dict[str, Tuples] = {
            symbol: frozenset(tuple(int(v) for v in t) for t in relations.get(symbol, ()))
            for symbol in signature.names
        }

    @classmethod
    def digraph(cls, size: int, edges: Iterable[Sequence[int]], name: str = "") -> "Structure":
        """Build a digraph (single binary symbol E)."""
        return cls(DIGRAPH, size, {"E": edges}, name=name)

    @classmethod
    def graph(cls, size: int, edges: Iterable[Sequence[int]], name: str = "") -> "Structure":
        """Build the symmetric digraph of an undirected graph."""
        symmetric = set()
        for u, v in edges:
            symmetric.add((u, v))
            symmetric.add((v, u))
        return cls.digraph(size, symmetric, name=name)

    # ---- access ----
    @property
    def relations(self) -> Dict[str, Tuples]:
        return dict(self._relations)

    def relation(self, symbol: str) -> Tuples:
        try:
            return self._relations[symbol]
        except KeyError:
            raise KeyError(f"Structure has no relation '{symbol}'") from None

    def sorted_relation(self, symbol: str) -> List[Tuple[int, ...]]:
        return sorted(self.relation(symbol))

    def arity(self, symbol: str) -> int:
        return self.signature.arity(symbol)

    @property
    def elements(self) -> range:
        return range(self.size)

    def iter_tuples(self) -> Iterator[Tuple[str, Tuple[int, ...]]]:
        """Yield (symbol, tuple) pairs in signature order, tuples sorted."""
        for symbol in self.signature.names:
            for t in sorted(self._relations[symbol]):
                yield symbol, t

    @property
    def tuple_count(self) -> int:
        return sum(len(r) for r in self._relations.values())

    @property
    def is_digraph(self) -> bool:
        return len(self.signature) == 1 and self.signature.symbols[0][1] == 2

    @property
    def edges(self) -> Tuples:
        """The binary relation of a digraph."""
        if not self.is_digraph:
            raise ValueError(f"Structure with signature [{self.signature}] is not a digraph")
        return self._relations[self.signature.names[0]]

    def renamed(self, name: str) -> "Structure":
        return Structure(self.signature, self.size, self._relations, name=name)

    # ---- dunder ----
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Structure):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.size == other.size
            and self._relations == other._relations
        )

    def __hash__(self) -> int:
        return hash((self.signature, self.size, tuple(self._relations[s] for s in self.signature.names)))

    def __repr__(self) -> str:
        label = f"'{self.name}' " if self.name else ""
        counts = ", ".join(f"{s}:{len(r)}" for s, r in self._relations.items())
        return f"Structure({label}size={self.size}, {counts})"


@dataclass(frozen=True)
class Mapping:
    """A map from 0..len(table)-1 into 0..target_size-1.

    Carrier of homomorphisms, endomorphisms and automorphisms.
    """

    table: Tuple[int, ...]
    target_size: int

    @property
    def source_size(self) -> int:
        return len(self.table)

    def __call__(self, element: int) -> int:
        return self.table[element]

    def __getitem__(self, element: int) -> int:
        return self.table[element]

    def __iter__(self) -> Iterator[int]:
        return iter(self.table)

    def __len__(self) -> int:
        return len(self.table)

    @classmethod
    def identity(cls, size: int) -> "Mapping":
        return cls(tuple(range(size)), size)

    def then(self, other: "Mapping") -> "Mapping":
        """Composition: apply self first, then other."""
        if other.source_size != self.target_size:
            raise ValueError(
                f"Cannot compose: target size {self.target_size} != source size {other.source_size}"
            )
        return Mapping(tuple(other.table[v] for v in self.table), other.target_size)

    @property
    def image(self) -> FrozenSet[int]:
        return frozenset(self.table)

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and len(self.table) == self.target_size

    def problems(self) -> List[str]:
        return [
            f"target {v} of element {i} out of range 0..{self.target_size - 1}"
            for i, v in enumerate(self.table)
            if not 0 <= v < self.target_size
        ]


def validate(s: Structure) -> List[str]:
    """Return every invariant violation of a structure (empty list when well-formed).

    Examples:
        >>> validate(Structure.digraph(3, [(0, 5)]))
        ['E: tuple (0, 5) has entry out of range 0..2']
    """
    violations = list(s.signature.problems())
    if s.size < 1:
        violations.append("empty domain is not supported")
    for symbol, arity in s.signature:
        for t in sorted(s.relation(symbol)):
            if len(t) != arity:
                violations.append(f"{symbol}: arity mismatch, tuple {t} under {symbol}/{arity}")
            elif any(not 0 <= v < s.size for v in t):
                violations.append(f"{symbol}: tuple {t} has entry out of range 0..{s.size - 1}")
    return violations


def ensure_valid(s: Structure) -> Structure:
    """Return s unchanged or raise ValueError listing its violations."""
    violations = validate(s)
    if violations:
        label = s.name or "structure"
        raise ValueError(f"Invalid {label}: " + "; ".join(violations))
    return s


def check_same_signature(a: Structure, b: Structure) -> None:
    if a.signature != b.signature:
        raise SignatureMismatchError(
            f"Signature mismatch: [{a.signature}] vs [{b.signature}]"
        )


def is_homomorphism(
    h: Mapping,
    a: Structure,
    b: Structure,
    lists: Optional[Sequence[Iterable[int]]] = None,
) -> bool:
    """Check that h maps every tuple of a into b and respects optional lists."""
    check_same_signature(a, b)
    if h.source_size != a.size or h.target_size != b.size:
        return False
    if h.problems():
        return False
    if lists is not None:
        for element, allowed in enumerate(lists):
            if h[element] not in allowed:
                return False
    for symbol in a.signature.names:
        target = b.relation(symbol)
        for t in a.relation(symbol):
            if tuple(h.table[v] for v in t) not in target:
                return False
    return True
