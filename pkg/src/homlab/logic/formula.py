"""Primitive positive formulas.

Text form::

    pp free x1 x2 ; exists y1 y2 ; E(x1,y1) & E(y1,y2) & E(y2,x2)

``x = y`` is an equality atom, ``TRUE`` and ``FALSE`` are the constant atoms, and
an empty atom list means ``TRUE``.
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from homlab.errors import SignatureMismatchError
from homlab.structures.signature import Signature

EQUALS = "="
TRUE = "TRUE"
FALSE = "FALSE"

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_ATOM = re.compile(rf"^({_NAME})\s*\(([^()]*)\)$")
_EQUALITY = re.compile(rf"^({_NAME})\s*=\s*({_NAME})$")


@dataclass(frozen=True)
class Atom:
    """A relational atom R(v1,...,vk), an equality v1 = v2, TRUE or FALSE."""

    symbol: str
    variables: Tuple[str, ...] = ()

    @classmethod
    def relation(cls, symbol: str, *variables: str) -> "Atom":
        if symbol in (EQUALS, TRUE, FALSE):
            raise ValueError(f"'{symbol}' is reserved")
        return cls(symbol, tuple(variables))

    @classmethod
    def equality(cls, left: str, right: str) -> "Atom":
        return cls(EQUALS, (left, right))

    @classmethod
    def true(cls) -> "Atom":
        return cls(TRUE)

    @classmethod
    def false(cls) -> "Atom":
        return cls(FALSE)

    @property
    def is_equality(self) -> bool:
        return self.symbol == EQUALS

    @property
    def is_true(self) -> bool:
        return self.symbol == TRUE

    @property
    def is_false(self) -> bool:
        return self.symbol == FALSE

    @property
    def is_relational(self) -> bool:
        return self.symbol not in (EQUALS, TRUE, FALSE)

    @classmethod
    def parse(cls, text: str) -> "Atom":
        text = text.strip()
        if text in (TRUE, FALSE):
            return cls(text)
        match = _EQUALITY.match(text)
        if match:
            return cls.equality(match.group(1), match.group(2))
        match = _ATOM.match(text)
        if not match:
            raise ValueError(f"Malformed atom '{text}'")
        args = [a.strip() for a in match.group(2).split(",")] if match.group(2).strip() else []
        if not args or not all(re.fullmatch(_NAME, a) for a in args):
            raise ValueError(f"Malformed argument list in atom '{text}'")
        return cls.relation(match.group(1), *args)

    def __str__(self) -> str:
        if self.is_equality:
            return f"{self.variables[0]} = {self.variables[1]}"
        if not self.is_relational:
            return self.symbol
        return f"{self.symbol}({','.join(self.variables)})"


@dataclass(frozen=True)
class PPFormula:
    """An existentially quantified conjunction of atoms.

    Raises:
        ValueError: If variables repeat, free and bound overlap, or an atom uses an
            undeclared variable
    """

    free: Tuple[str, ...]
    bound: Tuple[str, ...]
    atoms: Tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "free", tuple(self.free))
        object.__setattr__(self, "bound", tuple(self.bound))
        object.__setattr__(self, "atoms", tuple(self.atoms))
        declared = self.free + self.bound
        if len(set(declared)) != len(declared):
            overlap = sorted(set(self.free) & set(self.bound))
            if overlap:
                raise ValueError(f"Variables {overlap} are both free and bound")
            raise ValueError("A variable is declared twice")
        known = set(declared)
        for atom in self.atoms:
            missing = [v for v in atom.variables if v not in known]
            if missing:
                raise ValueError(f"Atom '{atom}' uses undeclared variables {missing}")

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.free + self.bound

    @property
    def has_false(self) -> bool:
        return any(atom.is_false for atom in self.atoms)

    def symbols(self) -> Dict[str, int]:
        """Relation symbols used, with the arity of their first use."""
        used: Dict[str, int] = {}
        for atom in self.atoms:
            if atom.is_relational:
                used.setdefault(atom.symbol, len(atom.variables))
        return used

    def check_signature(self, signature: Signature) -> None:
        """Raise SignatureMismatchError unless every atom fits the signature."""
        for atom in self.atoms:
            if not atom.is_relational:
                continue
            if atom.symbol not in signature:
                raise SignatureMismatchError(f"Symbol '{atom.symbol}' is not in [{signature}]")
            if signature.arity(atom.symbol) != len(atom.variables):
                raise SignatureMismatchError(
                    f"Atom '{atom}' has {len(atom.variables)} arguments, "
                    f"'{atom.symbol}' has arity {signature.arity(atom.symbol)}"
                )

    def inferred_signature(self) -> Signature:
        used = self.symbols()
        for atom in self.atoms:
            if atom.is_relational and len(atom.variables) != used[atom.symbol]:
                raise SignatureMismatchError(f"Symbol '{atom.symbol}' is used with different arities")
        return Signature.of(*sorted(used.items()))

    @classmethod
    def parse(cls, text: str) -> "PPFormula":
        """Parse the one-line text form (newlines are treated as spaces).

        Raises:
            ValueError: On malformed input
        """
        flat = " ".join(text.split())
        parts = [p.strip() for p in flat.split(";")]
        if not parts[0].startswith("pp"):
            raise ValueError("A pp formula starts with 'pp'")
        head = parts[0][2:].strip()
        free: List[str] = []
        bound: List[str] = []
        body: Optional[str] = None
        sections = ([head] if head else []) + parts[1:]
        for section in sections:
            keyword, _, rest = section.partition(" ")
            if keyword == "free" and body is None:
                free.extend(rest.split())
            elif keyword == "exists" and body is None:
                bound.extend(rest.split())
            elif keyword in ("free", "exists"):
                raise ValueError(f"'{keyword}' after the atom list")
            elif body is None:
                body = section
            else:
                raise ValueError(f"Unexpected section '{section}'")
        atoms = tuple(Atom.parse(a) for a in body.split("&")) if body else ()
        return cls(tuple(free), tuple(bound), atoms)

    def __str__(self) -> str:
        parts = ["pp"]
        if self.free:
            parts[0] += " free " + " ".join(self.free)
        if self.bound:
            parts.append("exists " + " ".join(self.bound))
        parts.append(" & ".join(str(a) for a in self.atoms) if self.atoms else TRUE)
        return " ; ".join(parts)
