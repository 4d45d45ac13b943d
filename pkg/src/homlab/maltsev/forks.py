"""Forks and compact representations of relations with a Maltsev polymorphism.

A fork of an n-ary relation R is a triple (i, a, b) with 1 <= i <= n such that some
s, t in R agree on the first i - 1 coordinates and have s_i = a, t_i = b. A subset R'
of R is a representation of R when every fork of R is a fork of R'; it is compact
when it holds at most two witnesses per fork.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from homlab.errors import VerificationError
from homlab.logic.relation import Relation, closure
from homlab.polymorphisms.operation import Operation

Row = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Fork:
    """A fork (position, a, b); position is 1-based."""

    position: int
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.position},{self.a},{self.b})"


@dataclass(frozen=True)
class CompactRep:
    """A set of tuples standing for the m-closed relation it generates."""

    arity: int
    domain_size: int
    tuples: FrozenSet[Row]

    def __post_init__(self):
        object.__setattr__(self, "tuples", frozenset(tuple(t) for t in self.tuples))
        for t in self.tuples:
            if len(t) != self.arity:
                raise ValueError(f"Tuple {t} does not have arity {self.arity}")
            if any(not 0 <= v < self.domain_size for v in t):
                raise ValueError(f"Tuple {t} has entries outside 0..{self.domain_size - 1}")

    @classmethod
    def of(cls, arity: int, domain_size: int, tuples: Iterable[Sequence[int]]) -> "CompactRep":
        return cls(arity, domain_size, frozenset(tuple(t) for t in tuples))

    @classmethod
    def full(cls, arity: int, domain_size: int) -> "CompactRep":
        """Representation of A^n: a at position i and 0 elsewhere, for every i and a.

        The tuples (0,..,0,a,0,..,0) and (0,..,0,b,0,..,0) witness the fork (i, a, b),
        so A^n is never materialised.
        """
        rows = {()} if arity == 0 else set()
        for i in range(arity):
            for a in range(domain_size):
                row = [0] * arity
                row[i] = a
                rows.add(tuple(row))
        return cls(arity, domain_size, frozenset(rows))

    @property
    def is_empty(self) -> bool:
        return not self.tuples

    def sorted(self) -> List[Row]:
        return sorted(self.tuples)

    def as_relation(self) -> Relation:
        return Relation(self.arity, self.domain_size, self.tuples)

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.sorted())


def fork_witnesses(rows: Iterable[Row], arity: int) -> Dict[Fork, Tuple[Row, Row]]:
    """The least witness pair (s, t) of every fork of the given tuples.

    Tuples are scanned in sorted order, so the chosen pair depends only on the set.
    A fork (i, a, a) is witnessed by s = t.
    """
    witnesses: Dict[Fork, Tuple[Row, Row]] = {}
    ordered = sorted(set(rows))
    for i in range(arity):
        first_by_prefix: Dict[Row, Dict[int, Row]] = {}
        for row in ordered:
            first_by_prefix.setdefault(row[:i], {}).setdefault(row[i], row)
        for by_value in first_by_prefix.values():
            for a, s in by_value.items():
                for b, t in by_value.items():
                    fork = Fork(i + 1, a, b)
                    if fork not in witnesses or (s, t) < witnesses[fork]:
                        witnesses[fork] = (s, t)
    return witnesses


def forks(r) -> Set[Fork]:
    """All forks of a relation (or of the tuple set of a representation).

    Examples:
        >>> sorted(str(f) for f in forks(Relation.of(2, 2, [(0, 0), (1, 1)])))
        ['(1,0,0)', '(1,0,1)', '(1,1,0)', '(1,1,1)', '(2,0,0)', '(2,1,1)']
    """
    return set(fork_witnesses(r.tuples, r.arity))


def compact_representation(r: Relation) -> CompactRep:
    """Pick the least witness pair of every fork of r.

    The result is a subset of r with the same forks and at most two tuples per fork.
    """
    rows = set()
    for s, t in fork_witnesses(r.tuples, r.arity).values():
        rows.add(s)
        rows.add(t)
    return CompactRep(r.arity, r.domain_size, frozenset(rows))


def is_maltsev(m: Operation) -> bool:
    """True iff m(y,x,x) = m(x,x,y) = y for all x, y."""
    if m.arity != 3:
        return False
    n = m.domain_size
    return all(m(y, x, x) == y and m(x, x, y) == y for x in range(n) for y in range(n))


def require_maltsev(m: Operation) -> None:
    if not is_maltsev(m):
        raise ValueError(f"{m.label} is not a Maltsev operation")


def closure_under_maltsev(rep: CompactRep, m: Operation) -> Relation:
    """The relation <R'>_m generated by a representation.

    Raises:
        ValueError: If m is not Maltsev or acts on a different domain

    Examples:
        >>> from homlab.polymorphisms.operation import boolean_minority
        >>> len(closure_under_maltsev(CompactRep.of(2, 2, [(0, 0), (1, 1), (0, 1)]), boolean_minority()))
        4
    """
    require_maltsev(m)
    return closure(rep.as_relation(), [m])


def check_representation(rep: CompactRep, m: Operation, expected: Optional[Relation] = None) -> None:
    """Verify that rep is a compact representation of <rep>_m (or of ``expected``).

    Raises:
        VerificationError: If a fork is missing, a tuple lies outside the relation or
            the size bound is violated
    """
    generated = closure_under_maltsev(rep, m) if expected is None else expected
    missing = forks(generated) - forks(rep)
    if missing:
        raise VerificationError(f"Representation misses forks {sorted(str(f) for f in missing)[:5]}")
    if not rep.tuples <= generated.tuples:
        raise VerificationError("Representation holds tuples outside the represented relation")
    if len(rep) > 2 * len(forks(generated)):
        raise VerificationError(f"Representation of size {len(rep)} is not compact")
