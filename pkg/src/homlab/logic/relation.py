"""Relations over 0..n-1 and their closure under operations."""

from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from homlab.polymorphisms.operation import Operation
from homlab.structures.structure import Structure


@dataclass(frozen=True)
class Relation:
    """A set of k-tuples over the domain 0..n-1."""

    arity: int
    domain_size: int
    tuples: FrozenSet[Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "tuples", frozenset(tuple(t) for t in self.tuples))
        if self.arity < 0:
            raise ValueError(f"Relation arity must be non-negative, got {self.arity}")
        for t in self.tuples:
            if len(t) != self.arity:
                raise ValueError(f"Tuple {t} does not have arity {self.arity}")
            if any(not 0 <= v < self.domain_size for v in t):
                raise ValueError(f"Tuple {t} has entries outside 0..{self.domain_size - 1}")

    @classmethod
    def of(cls, arity: int, domain_size: int, tuples: Iterable[Sequence[int]]) -> "Relation":
        return cls(arity, domain_size, frozenset(tuple(t) for t in tuples))

    @classmethod
    def from_structure(cls, b: Structure, symbol: str) -> "Relation":
        return cls(b.arity(symbol), b.size, b.relation(symbol))

    @classmethod
    def full(cls, arity: int, domain_size: int) -> "Relation":
        return cls(arity, domain_size, frozenset(product(range(domain_size), repeat=arity)))

    @classmethod
    def diagonal(cls, domain_size: int, arity: int = 2) -> "Relation":
        return cls(arity, domain_size, frozenset((a,) * arity for a in range(domain_size)))

    @classmethod
    def disequality(cls, domain_size: int) -> "Relation":
        return cls(2, domain_size, frozenset((a, b) for a in range(domain_size) for b in range(domain_size) if a != b))

    def sorted(self) -> List[Tuple[int, ...]]:
        return sorted(self.tuples)

    def __contains__(self, t: object) -> bool:
        return t in self.tuples

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.tuples)

    def is_preserved_by(self, f: Operation) -> bool:
        """True iff applying f componentwise to tuples of the relation stays inside it."""
        if f.domain_size != self.domain_size:
            raise ValueError(f"Operation domain {f.domain_size} does not match relation domain {self.domain_size}")
        rows = self.sorted()
        return all(f.apply_columns(choice) in self.tuples for choice in product(rows, repeat=f.arity))

    def __str__(self) -> str:
        return "{" + ", ".join("(" + ",".join(map(str, t)) + ")" for t in self.sorted()) + "}"


def closure(r: Relation, ops: Sequence[Operation]) -> Relation:
    """The least superset of r closed under every operation applied componentwise.

    New tuples are combined only in rounds that involve at least one tuple found in
    the previous round.

    Examples:
        >>> from homlab.polymorphisms.operation import boolean_majority
        >>> closure(Relation.of(2, 2, [(0, 1), (1, 0)]), [boolean_majority()]) == Relation.of(2, 2, [(0, 1), (1, 0)])
        True
    """
    for f in ops:
        if f.domain_size != r.domain_size:
            raise ValueError(f"{f.label} acts on {f.domain_size} elements, relation on {r.domain_size}")
    current = set(r.tuples)
    frontier = set(r.tuples)
    while frontier:
        rows = sorted(current)
        found = set()
        for f in ops:
            for choice in product(rows, repeat=f.arity):
                if not any(row in frontier for row in choice):
                    continue
                image = f.apply_columns(choice)
                if image not in current:
                    found.add(image)
        current |= found
        frontier = found
    return Relation(r.arity, r.domain_size, frozenset(current))
