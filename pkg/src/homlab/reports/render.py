"""Tables and report blocks for the objects homlab produces."""

from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from prettytable import PrettyTable

from homlab.classify.cyclic import CyclicProfile
from homlab.classify.verdict import PropertyVerdict, Verdict
from homlab.consistency.lists import format_lists
from homlab.polymorphisms.operation import Operation
from homlab.reports.base import BaseReportFormatter
from homlab.structures.cores import CoreResult
from homlab.structures.structure import Mapping


def operation_table(f: Operation) -> PrettyTable:
    """Binary operations as a Cayley table, other arities as one row per argument tuple.

    Examples:
        >>> from homlab.polymorphisms.operation import minimum
        >>> operation_table(minimum(2)).field_names
        ['x\\\\y', '0', '1']
    """
    table = PrettyTable()
    n = f.domain_size
    if f.arity == 2:
        table.field_names = ["x\\y"] + [str(y) for y in range(n)]
        for x in range(n):
            table.add_row([x] + [f(x, y) for y in range(n)])
        return table
    table.field_names = [f"x{i + 1}" for i in range(f.arity)] + [f.label]
    for args in product(range(n), repeat=f.arity):
        table.add_row(list(args) + [f(*args)])
    return table


def mapping_table(h: Mapping) -> PrettyTable:
    table = PrettyTable()
    table.field_names = ["element", "image"]
    table.align["element"] = "r"
    table.align["image"] = "r"
    for element, image in enumerate(h.table):
        table.add_row([element, image])
    return table


def colouring_table(colouring: Dict[int, int]) -> PrettyTable:
    table = PrettyTable()
    table.field_names = ["vertex", "colour"]
    for vertex, colour in sorted(colouring.items()):
        table.add_row([vertex, colour])
    return table


def orbits_table(orbits: Sequence[Sequence[Tuple[int, ...]]]) -> PrettyTable:
    table = PrettyTable()
    table.field_names = ["orbit", "size", "tuples"]
    table.align["tuples"] = "l"
    for index, orbit in enumerate(orbits):
        table.add_row([index, len(orbit), " ".join("(" + ",".join(map(str, t)) + ")" for t in orbit)])
    return table


def profile_table(profile: CyclicProfile) -> PrettyTable:
    table = PrettyTable()
    table.field_names = ["arity", "cyclic polymorphism"]
    for arity, outcome in sorted(profile.outcomes.items()):
        table.add_row([arity, outcome.value])
    return table


def write_operations(formatter: BaseReportFormatter, operations: Dict[str, Operation]) -> None:
    for symbol, op in sorted(operations.items()):
        formatter.write_table(f"operation {symbol}", operation_table(op))


def write_core(formatter: BaseReportFormatter, c: Optional[CoreResult]) -> None:
    if c is None:
        return
    formatter.write_field("core size", c.structure.size)
    formatter.write_field("core elements", " ".join(map(str, c.elements)))


def write_verdict(formatter: BaseReportFormatter, verdict: Verdict) -> None:
    """The verdict line first, then its certificate."""
    formatter.write_field("verdict", verdict.complexity.value)
    formatter.write_field("reason", verdict.reason)
    if verdict.stage:
        formatter.write_field("stage", verdict.stage)
    if verdict.classes:
        formatter.write_field("classes", " ".join(verdict.classes))
    if verdict.vertices:
        formatter.write_field("vertices", " ".join(map(str, verdict.vertices)))
    write_core(formatter, verdict.core)
    if verdict.colouring is not None:
        formatter.write_table("2-colouring", colouring_table(verdict.colouring))
    write_operations(formatter, verdict.operations)


def write_property(formatter: BaseReportFormatter, name: str, verdict: PropertyVerdict) -> None:
    label = {True: "yes", False: "no", None: "inconclusive"}[verdict.holds]
    formatter.write_field(name, label)
    formatter.write_field("reason", verdict.reason)
    if verdict.stage:
        formatter.write_field("stage", verdict.stage)
    write_core(formatter, verdict.core)
    write_operations(formatter, verdict.operations)


def write_lists(formatter: BaseReportFormatter, lists: Optional[List[FrozenSet[int]]]) -> None:
    formatter.write_section("lists", format_lists(lists))
