"""Finite operations and the preservation check."""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence, Tuple

import numpy as np

from homlab.structures.constructions import encode_tuple
from homlab.structures.structure import Structure

_SMALL_PRODUCT = 200_000
_CHUNK = 1 << 16


@dataclass(frozen=True)
class Operation:
    """A k-ary operation on 0..n-1 stored as a row-major value table.

    ``table[encode_tuple(args, n)]`` is the value at args, so the table index of
    an argument tuple equals its element index in the k-th power.
    """

    arity: int
    domain_size: int
    table: Tuple[int, ...]
    name: str = ""

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError(f"Operation arity must be positive, got {self.arity}")
        expected = self.domain_size ** self.arity
        if len(self.table) != expected:
            raise ValueError(f"Operation table needs {expected} entries, got {len(self.table)}")
        if any(not 0 <= v < self.domain_size for v in self.table):
            raise ValueError(f"Operation values must lie in 0..{self.domain_size - 1}")

    @classmethod
    def from_function(cls, arity: int, domain_size: int, fn: Callable[..., int], name: str = "") -> "Operation":
        table = tuple(fn(*args) for args in product(range(domain_size), repeat=arity))
        return cls(arity, domain_size, table, name)

    def __call__(self, *args: int) -> int:
        if len(args) != self.arity:
            raise ValueError(f"{self.label} takes {self.arity} arguments, got {len(args)}")
        return self.table[encode_tuple(args, self.domain_size)]

    def apply_columns(self, rows: Sequence[Sequence[int]]) -> Tuple[int, ...]:
        """Apply componentwise to ``arity`` tuples of equal length."""
        return tuple(self(*column) for column in zip(*rows))

    def items(self) -> Iterator[Tuple[Tuple[int, ...], int]]:
        for args, value in zip(product(range(self.domain_size), repeat=self.arity), self.table):
            yield args, value

    @property
    def label(self) -> str:
        return self.name or f"op/{self.arity}"

    def renamed(self, name: str) -> "Operation":
        return Operation(self.arity, self.domain_size, self.table, name)

    def is_idempotent(self) -> bool:
        return all(self(*([a] * self.arity)) == a for a in range(self.domain_size))


def is_polymorphism(f: Operation, b: Structure) -> bool:
    """True iff f preserves every relation of b.

    Examples:
        >>> from homlab.structures.library import transitive_tournament
        >>> is_polymorphism(minimum(3, 2), transitive_tournament(3))
        True
    """
    if f.domain_size != b.size:
        raise ValueError(f"Operation domain {f.domain_size} does not match structure size {b.size}")
    n, k = f.domain_size, f.arity
    table = f.table
    for symbol, arity in b.signature:
        relation = b.relation(symbol)
        rows = sorted(relation)
        if len(rows) ** k > _SMALL_PRODUCT:
            if not _preserves_vectorized(f, rows, arity):
                return False
            continue
        # partials hold encoded column prefixes, one entry per relation position
        partials = [tuple([0] * arity)]
        for _ in range(k):
            partials = [tuple(p[i] * n + t[i] for i in range(arity)) for p in partials for t in rows]
        if any(tuple(table[i] for i in p) not in relation for p in partials):
            return False
    return True


def _preserves_vectorized(f: Operation, rows: Sequence[Tuple[int, ...]], arity: int) -> bool:
    """Same check over all row choices, with the last positions handled as one numpy block."""
    n, k = f.domain_size, f.arity
    table = np.asarray(f.table, dtype=np.int64)
    data = np.asarray(rows, dtype=np.int64).reshape(len(rows), arity)
    weights = n ** np.arange(arity - 1, -1, -1, dtype=np.int64)
    member = np.zeros(n ** arity, dtype=bool)
    member[data @ weights] = True

    tail = 1
    while tail < k and len(rows) ** (tail + 1) <= _CHUNK:
        tail += 1
    suffix = np.zeros((1, arity), dtype=np.int64)
    for _ in range(tail):
        suffix = (suffix[:, None, :] * n + data[None, :, :]).reshape(-1, arity)
    scale = n ** tail

    for head in product(range(len(rows)), repeat=k - tail):
        prefix = np.zeros(arity, dtype=np.int64)
        for r in head:
            prefix = prefix * n + data[r]
        images = table[prefix * scale + suffix] @ weights
        if not member[images].all():
            return False
    return True


def depends_on(f: Operation, position: int) -> bool:
    """True iff changing argument ``position`` can change the value of f."""
    n = f.domain_size
    for args, value in f.items():
        for other in range(n):
            if other == args[position]:
                continue
            changed = args[:position] + (other,) + args[position + 1:]
            if f(*changed) != value:
                return True
    return False


def essential_positions(f: Operation) -> Tuple[int, ...]:
    return tuple(i for i in range(f.arity) if depends_on(f, i))


def is_essentially_unary(f: Operation) -> bool:
    """True iff f depends on at most one argument."""
    return len(essential_positions(f)) <= 1


# ---- named operations ----

def projection(arity: int, domain_size: int, position: int) -> Operation:
    """The projection onto a 0-based argument position."""
    return Operation.from_function(arity, domain_size, lambda *xs: xs[position], name=f"pi{arity}_{position + 1}")


def constant(arity: int, domain_size: int, value: int) -> Operation:
    return Operation.from_function(arity, domain_size, lambda *xs: value, name=f"const{value}")


def minimum(domain_size: int, arity: int = 2) -> Operation:
    return Operation.from_function(arity, domain_size, lambda *xs: min(xs), name="min")


def maximum(domain_size: int, arity: int = 2) -> Operation:
    return Operation.from_function(arity, domain_size, lambda *xs: max(xs), name="max")


def median(domain_size: int) -> Operation:
    return Operation.from_function(3, domain_size, lambda x, y, z: sorted((x, y, z))[1], name="median")


def boolean_majority() -> Operation:
    return Operation.from_function(3, 2, lambda x, y, z: int(x + y + z >= 2), name="majority")


def boolean_minority() -> Operation:
    return Operation.from_function(3, 2, lambda x, y, z: (x + y + z) % 2, name="minority")


def affine_maltsev(p: int) -> Operation:
    """x - y + z mod p."""
    return Operation.from_function(3, p, lambda x, y, z: (x - y + z) % p, name=f"affine{p}")


def first_on_distinct_majority(domain_size: int) -> Operation:
    """Majority on repeated inputs, the first argument when all three differ.

    A polymorphism of every directed cycle.
    """
    return Operation.from_function(3, domain_size, lambda x, y, z: y if y == z else x, name="majority-first")


def minority_first_on_distinct() -> Operation:
    """Minority on {0,1,2}: m(y,x,x)=m(x,y,x)=m(x,x,y)=y, and x when all differ."""
    return Operation.from_function(3, 3, lambda x, y, z: _minority_value(x, y, z, x), name="m1")


def minority_two_on_distinct() -> Operation:
    """Minority on {0,1,2} with value 2 when all three arguments differ."""
    return Operation.from_function(3, 3, lambda x, y, z: _minority_value(x, y, z, 2), name="m2")


def _minority_value(x: int, y: int, z: int, distinct: int) -> int:
    if x == y:
        return z
    if x == z:
        return y
    if y == z:
        return x
    return distinct


def cyclic_composition(s: Operation, t: Operation) -> Operation:
    """The l-ary operation x -> s(t(x), t(rot_1 x), ..., t(rot_{k-1} x)).

    k is the arity of s, l the arity of t, and rot_i rotates the arguments left
    by i positions (indices mod l). The result is cyclic when t is cyclic, and
    when s is cyclic and l divides k.
    """
    if s.domain_size != t.domain_size:
        raise ValueError(f"Domains differ: {s.domain_size} and {t.domain_size}")
    k, l = s.arity, t.arity

    def composed(*xs: int) -> int:
        return s(*(t(*(xs[(i + j) % l] for j in range(l))) for i in range(k)))

    return Operation.from_function(l, s.domain_size, composed, name=f"({s.label} o {t.label})")


def from_rows(arity: int, domain_size: int, rows: Iterable[Tuple[Tuple[int, ...], int]], name: str = "") -> Operation:
    """Build an operation from (args, value) rows; every argument tuple must appear once."""
    values = {}
    for args, value in rows:
        if len(args) != arity:
            raise ValueError(f"Row {args} does not have {arity} arguments")
        if args in values:
            raise ValueError(f"Duplicate row for arguments {args}")
        values[args] = value
    missing = [args for args in product(range(domain_size), repeat=arity) if args not in values]
    if missing:
        raise ValueError(f"Missing rows, e.g. {missing[0]} ({len(missing)} in total)")
    return Operation(arity, domain_size, tuple(values[a] for a in product(range(domain_size), repeat=arity)), name)
