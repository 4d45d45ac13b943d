"""Operation tables and bare relations.

    op <NAME> <arity> <domain-size>
    <x1> ... <xk> <value>
    end

    relation <arity> <domain-size>
    <e1> ... <e_arity>
    end
"""

from itertools import product
from typing import List, Tuple

from homlab.errors import FormatError
from homlab.io.base import BaseFormatReader, Line, parse_int
from homlab.logic.relation import Relation
from homlab.polymorphisms.operation import Operation, from_rows


def _body(lines: List[Line], source: str) -> List[Line]:
    """The lines between the header and 'end'; nothing may follow 'end'."""
    for position, (number, text) in enumerate(lines[1:], start=1):
        if text == "end":
            if position + 1 < len(lines):
                extra_number, extra = lines[position + 1]
                raise FormatError(f"Content after 'end': '{extra}'", source, extra_number)
            return lines[1:position]
    raise FormatError("Missing 'end'", source, lines[-1][0])


class OperationReader(BaseFormatReader):
    """Reads ``op`` documents; every argument tuple must have exactly one row."""

    keyword = "op"

    def parse(self, lines: List[Line], source: str) -> Operation:
        number, header = lines[0]
        tokens = header.split()
        if len(tokens) != 4:
            raise FormatError("Expected 'op <NAME> <arity> <domain-size>'", source, number)
        name = tokens[1]
        arity = parse_int(tokens[2], "arity", source, number, minimum=1)
        size = parse_int(tokens[3], "domain size", source, number, minimum=1)
        rows: List[Tuple[Tuple[int, ...], int]] = []
        for row_number, text in _body(lines, source):
            values = [parse_int(t, "value", source, row_number, minimum=0) for t in text.split()]
            if len(values) != arity + 1:
                raise FormatError(f"Row needs {arity} arguments and a value", source, row_number)
            if any(v >= size for v in values):
                raise FormatError(f"Row {tuple(values)} has entries outside 0..{size - 1}", source, row_number)
            rows.append((tuple(values[:-1]), values[-1]))
        try:
            return from_rows(arity, size, rows, name=name)
        except ValueError as e:
            raise FormatError(str(e), source, number) from None


class RelationReader(BaseFormatReader):
    """Reads ``relation`` documents."""

    keyword = "relation"

    def parse(self, lines: List[Line], source: str) -> Relation:
        number, header = lines[0]
        tokens = header.split()
        if len(tokens) != 3:
            raise FormatError("Expected 'relation <arity> <domain-size>'", source, number)
        arity = parse_int(tokens[1], "arity", source, number, minimum=1)
        size = parse_int(tokens[2], "domain size", source, number, minimum=1)
        tuples = []
        for row_number, text in _body(lines, source):
            values = tuple(parse_int(t, "element", source, row_number, minimum=0) for t in text.split())
            if len(values) != arity:
                raise FormatError(f"Tuple needs {arity} entries, got {len(values)}", source, row_number)
            if any(v >= size for v in values):
                raise FormatError(f"Tuple {values} has entries outside 0..{size - 1}", source, row_number)
            tuples.append(values)
        return Relation.of(arity, size, tuples)


def format_operation(f: Operation) -> str:
    """Write an operation in the format ``OperationReader`` reads."""
    name = "".join((f.name or "f").split())
    out = [f"op {name} {f.arity} {f.domain_size}"]
    for args, value in zip(product(range(f.domain_size), repeat=f.arity), f.table):
        out.append(" ".join(map(str, args + (value,))))
    out.append("end")
    return "\n".join(out)


def format_relation(r: Relation) -> str:
    out = [f"relation {r.arity} {r.domain_size}"]
    out.extend(" ".join(map(str, t)) for t in r.sorted())
    out.append("end")
    return "\n".join(out)
