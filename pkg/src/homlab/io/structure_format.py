"""The structure/instance text format.

    structure <name>
    domain <n>
    rel <NAME> <arity>
    <e1> ... <e_arity>
    end
    fix <var> <value>
    allow <var> <v1,v2,...>
    endstructure

``fix`` and ``allow`` lines are only meaningful for instances; they become the
initial candidate lists of the solvers.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from homlab.errors import FormatError
from homlab.io.base import BaseFormatReader, Line, parse_int
from homlab.structures.signature import Signature
from homlab.structures.structure import Structure, validate


@dataclass(frozen=True)
class StructureDocument:
    """A parsed structure plus the candidate lists from ``fix``/``allow`` lines."""

    structure: Structure
    lists: Optional[Dict[int, FrozenSet[int]]] = None


class StructureReader(BaseFormatReader):
    """Reads ``structure ... endstructure`` documents."""

    keyword = "structure"

    def parse(self, lines: List[Line], source: str) -> StructureDocument:
        number, header = lines[0]
        name = header[len(self.keyword):].strip()
        if " " in name:
            raise FormatError(f"Structure name '{name}' contains spaces", source, number)
        size: Optional[int] = None
        symbols: List[Tuple[str, int]] = []
        relations: Dict[str, List[Tuple[int, ...]]] = {}
        lists: Dict[int, FrozenSet[int]] = {}
        current: Optional[Tuple[str, int]] = None
        closed = False
        for number, text in lines[1:]:
            tokens = text.split()
            if closed:
                raise FormatError(f"Content after 'endstructure': '{text}'", source, number)
            if current is not None:
                if tokens == ["end"]:
                    current = None
                    continue
                relations[current[0]].append(self._tuple(tokens, current, size, source, number))
                continue
            keyword = tokens[0]
            if keyword == "domain":
                if size is not None:
                    raise FormatError("Domain declared twice", source, number)
                if len(tokens) != 2:
                    raise FormatError("Expected 'domain <n>'", source, number)
                size = parse_int(tokens[1], "domain size", source, number, minimum=1)
            elif keyword == "rel":
                if size is None:
                    raise FormatError("'rel' before 'domain'", source, number)
                if len(tokens) != 3:
                    raise FormatError("Expected 'rel <NAME> <arity>'", source, number)
                symbol, arity = tokens[1], parse_int(tokens[2], "arity", source, number, minimum=1)
                if symbol in relations:
                    raise FormatError(f"Relation '{symbol}' declared twice", source, number)
                symbols.append((symbol, arity))
                relations[symbol] = []
                current = (symbol, arity)
            elif keyword in ("fix", "allow"):
                if size is None:
                    raise FormatError(f"'{keyword}' before 'domain'", source, number)
                var, values = self._list_line(tokens, size, source, number)
                lists[var] = lists.get(var, frozenset(range(size))) & values
            elif keyword == "endstructure":
                closed = True
            else:
                raise FormatError(f"Unexpected line '{text}'", source, number)
        if current is not None:
            raise FormatError(f"Relation '{current[0]}' is not closed with 'end'", source, number)
        if not closed:
            raise FormatError("Missing 'endstructure'", source, number)
        if size is None:
            raise FormatError("Missing 'domain' line", source, number)
        structure = Structure(Signature(tuple(symbols)), size, relations, name=name)
        problems = validate(structure)
        if problems:
            raise FormatError("; ".join(problems), source, number)
        return StructureDocument(structure, lists or None)

    @staticmethod
    def _tuple(tokens: List[str], current: Tuple[str, int], size: int, source: str, number: int) -> Tuple[int, ...]:
        symbol, arity = current
        if len(tokens) != arity:
            raise FormatError(f"Tuple of {symbol} needs {arity} entries, got {len(tokens)}", source, number)
        values = tuple(parse_int(t, "element", source, number, minimum=0) for t in tokens)
        if any(v >= size for v in values):
            raise FormatError(f"Tuple {values} has entries outside 0..{size - 1}", source, number)
        return values

    @staticmethod
    def _list_line(tokens: List[str], size: int, source: str, number: int) -> Tuple[int, FrozenSet[int]]:
        if len(tokens) != 3:
            raise FormatError(f"Expected '{tokens[0]} <var> <value(s)>'", source, number)
        var = parse_int(tokens[1], "variable", source, number, minimum=0)
        if var >= size:
            raise FormatError(f"Variable {var} outside 0..{size - 1}", source, number)
        if tokens[0] == "fix":
            raw = [tokens[2]]
        else:
            raw = [v for v in tokens[2].split(",") if v]
        values = frozenset(parse_int(v, "value", source, number, minimum=0) for v in raw)
        return var, values


def format_structure(s: Structure, lists: Optional[Dict[int, Sequence[int]]] = None) -> str:
    """Write a structure (and optional lists) in the format ``StructureReader`` reads.

    Examples:
        >>> from homlab.structures.library import complete_graph
        >>> print(format_structure(complete_graph(2)))
        structure K2
        domain 2
        rel E 2
        0 1
        1 0
        end
        endstructure
    """
    out = [f"structure {s.name}".rstrip(), f"domain {s.size}"]
    for symbol, arity in s.signature:
        out.append(f"rel {symbol} {arity}")
        out.extend(" ".join(map(str, t)) for t in s.sorted_relation(symbol))
        out.append("end")
    for var, values in sorted((lists or {}).items()):
        values = sorted(values)
        if len(values) == 1:
            out.append(f"fix {var} {values[0]}")
        else:
            out.append(f"allow {var} {','.join(map(str, values))}")
    out.append("endstructure")
    return "\n".join(out)
