"""Compact representations and the solver for templates with a Maltsev polymorphism."""

from homlab.maltsev.forks import (
    CompactRep,
    Fork,
    check_representation,
    closure_under_maltsev,
    compact_representation,
    fork_witnesses,
    forks,
    is_maltsev,
)
from homlab.maltsev.procedures import fix_values, next_representation, nonempty
from homlab.maltsev.solver import MaltsevResult, check_maltsev_polymorphism, solve
from homlab.maltsev.linear import LinearSystem, solve_mod_p, solve_sum_instance, sum_system

__all__ = [
    "CompactRep",
    "Fork",
    "check_representation",
    "closure_under_maltsev",
    "compact_representation",
    "fork_witnesses",
    "forks",
    "is_maltsev",
    "fix_values",
    "next_representation",
    "nonempty",
    "MaltsevResult",
    "check_maltsev_polymorphism",
    "solve",
    "LinearSystem",
    "solve_mod_p",
    "solve_sum_instance",
    "sum_system",
]
