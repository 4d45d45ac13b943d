"""Linear identities over function symbols and their pointwise check."""

import re
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterable, List, Mapping as MappingType, Optional, Sequence, Tuple

from homlab.polymorphisms.operation import Operation

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_TERM = re.compile(rf"^\s*({_NAME})\s*(?:\((.*)\))?\s*$")


@dataclass(frozen=True)
class Term:
    """Either a bare variable (symbol None, one arg) or symbol(var, ..., var)."""

    symbol: Optional[str]
    args: Tuple[str, ...]

    @classmethod
    def var(cls, name: str) -> "Term":
        return cls(None, (name,))

    @classmethod
    def app(cls, symbol: str, *args: str) -> "Term":
        return cls(symbol, tuple(args))

    @property
    def is_variable(self) -> bool:
        return self.symbol is None

    def evaluate(self, operations: MappingType[str, Operation], values: Dict[str, int]) -> int:
        if self.symbol is None:
            return values[self.args[0]]
        return operations[self.symbol](*(values[a] for a in self.args))

    def __str__(self) -> str:
        if self.symbol is None:
            return self.args[0]
        return f"{self.symbol}({','.join(self.args)})"


def parse_term(text: str) -> Term:
    """Parse 'x' or 't(x,y,z)'.

    Raises:
        ValueError: For nested terms (not linear) or malformed text
    """
    match = _TERM.match(text)
    if not match:
        raise ValueError(f"Malformed term '{text.strip()}'")
    head, inner = match.group(1), match.group(2)
    if inner is None:
        return Term.var(head)
    if "(" in inner or ")" in inner:
        raise ValueError(f"Non-linear identity term '{text.strip()}': nested applications are not supported")
    args = [a.strip() for a in inner.split(",")]
    if not all(re.fullmatch(_NAME, a) for a in args):
        raise ValueError(f"Malformed argument list in term '{text.strip()}'")
    return Term.app(head, *args)


@dataclass(frozen=True)
class Identity:
    left: Term
    right: Term

    @classmethod
    def parse(cls, text: str) -> "Identity":
        if text.count("=") != 1:
            raise ValueError(f"Identity '{text.strip()}' must contain exactly one '='")
        left, right = text.split("=")
        return cls(parse_term(left), parse_term(right))

    @property
    def variables(self) -> Tuple[str, ...]:
        """Variables in first-occurrence order, left side first."""
        seen: Dict[str, None] = {}
        for term in (self.left, self.right):
            for a in term.args:
                seen.setdefault(a, None)
        return tuple(seen)

    @property
    def is_height_one(self) -> bool:
        return not self.left.is_variable and not self.right.is_variable

    def __str__(self) -> str:
        return f"{self.left} = {self.right}"


@dataclass(frozen=True)
class IdentitySystem:
    """Declared function symbols plus identities between linear terms.

    Raises:
        ValueError: If a symbol is undeclared or used with the wrong arity, or an
            identity equates two distinct variables
    """

    symbols: Tuple[Tuple[str, int], ...]
    identities: Tuple[Identity, ...]
    name: str = ""

    def __post_init__(self):
        declared = dict(self.symbols)
        if len(declared) != len(self.symbols):
            raise ValueError("Duplicate function symbol declaration")
        for symbol, arity in self.symbols:
            if arity < 1:
                raise ValueError(f"Function symbol '{symbol}' needs a positive arity")
        for identity in self.identities:
            for term in (identity.left, identity.right):
                if term.is_variable:
                    continue
                if term.symbol not in declared:
                    raise ValueError(f"Undeclared function symbol '{term.symbol}' in '{identity}'")
                if len(term.args) != declared[term.symbol]:
                    raise ValueError(
                        f"'{term}' uses {term.symbol} with {len(term.args)} arguments, declared {declared[term.symbol]}"
                    )
            if identity.left.is_variable and identity.right.is_variable and identity.left != identity.right:
                raise ValueError(f"Identity '{identity}' equates two distinct variables")

    @classmethod
    def build(cls, symbols: Sequence[Tuple[str, int]], identities: Iterable[str], name: str = "") -> "IdentitySystem":
        """Build from identity strings such as 't(x,x,y) = t(x,y,x)'."""
        return cls(tuple(symbols), tuple(Identity.parse(text) for text in identities), name)

    def arity(self, symbol: str) -> int:
        return dict(self.symbols)[symbol]

    @property
    def is_height_one(self) -> bool:
        return all(i.is_height_one for i in self.identities)

    def with_identities(self, extra: Iterable[Identity]) -> "IdentitySystem":
        return IdentitySystem(self.symbols, self.identities + tuple(extra), self.name)

    def __str__(self) -> str:
        parts = [f"sym {s} {a}" for s, a in self.symbols] + [f"id {i}" for i in self.identities]
        return " ; ".join(parts)


def check_identities(assignment: MappingType[str, Operation], system: IdentitySystem) -> bool:
    """True iff every identity holds for all values of its variables.

    Raises:
        ValueError: If an operation is missing, has the wrong arity, or domains differ
    """
    domains = {op.domain_size for op in assignment.values()}
    if len(domains) > 1:
        raise ValueError(f"Operations live on different domains: {sorted(domains)}")
    for symbol, arity in system.symbols:
        if symbol not in assignment:
            raise ValueError(f"No operation assigned to symbol '{symbol}'")
        if assignment[symbol].arity != arity:
            raise ValueError(f"Symbol '{symbol}' has arity {arity}, operation has {assignment[symbol].arity}")
    if not domains:
        return True
    n = domains.pop()
    for identity in system.identities:
        variables = identity.variables
        for values in product(range(n), repeat=len(variables)):
            env = dict(zip(variables, values))
            if identity.left.evaluate(assignment, env) != identity.right.evaluate(assignment, env):
                return False
    return True


def variables_of(identities: Iterable[Identity]) -> List[str]:
    seen: Dict[str, None] = {}
    for identity in identities:
        for v in identity.variables:
            seen.setdefault(v, None)
    return list(seen)
