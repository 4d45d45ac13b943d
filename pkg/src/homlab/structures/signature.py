"""Relational signatures."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple


@dataclass(frozen=True)
class Signature:
    """An ordered sequence of relation symbols with their arities.

    The constructor accepts anything; ``problems()`` reports duplicate names and
    non-positive arities so that ``validate`` can list them as data.
    """

    symbols: Tuple[Tuple[str, int], ...] = ()

    @classmethod
    def of(cls, *symbols: Tuple[str, int]) -> "Signature":
        return cls(tuple((str(name), int(arity)) for name, arity in symbols))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.symbols)

    def arity(self, name: str) -> int:
        for symbol, arity in self.symbols:
            if symbol == name:
                return arity
        raise KeyError(f"Unknown relation symbol '{name}'")

    @property
    def max_arity(self) -> int:
        return max((arity for _, arity in self.symbols), default=0)

    def extended(self, extra: Iterable[Tuple[str, int]]) -> "Signature":
        """Return this signature followed by the extra symbols."""
        return Signature(self.symbols + tuple(extra))

    def restricted(self, names: Iterable[str]) -> "Signature":
        keep = set(names)
        return Signature(tuple(s for s in self.symbols if s[0] in keep))

    def problems(self) -> List[str]:
        issues = []
        seen = set()
        for name, arity in self.symbols:
            if name in seen:
                issues.append(f"duplicate symbol '{name}'")
            seen.add(name)
            if arity < 1:
                issues.append(f"symbol '{name}' has unsupported arity {arity}")
        return issues

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return ", ".join(f"{name}/{arity}" for name, arity in self.symbols)


DIGRAPH = Signature.of(("E", 2))
