"""Operations, identities and the search for polymorphisms."""

from homlab.polymorphisms.operation import (
    Operation,
    affine_maltsev,
    boolean_majority,
    boolean_minority,
    constant,
    cyclic_composition,
    depends_on,
    essential_positions,
    first_on_distinct_majority,
    from_rows,
    is_essentially_unary,
    is_polymorphism,
    maximum,
    median,
    minimum,
    minority_first_on_distinct,
    minority_two_on_distinct,
    projection,
)
from homlab.polymorphisms.identities import Identity, IdentitySystem, Term, check_identities, parse_term
from homlab.polymorphisms.conditions import PolymorphismKind, condition
from homlab.polymorphisms.indicator import IndicatorInstance, indicator_instance
from homlab.polymorphisms.search import (
    Outcome,
    PolymorphismResult,
    find_polymorphism,
    find_special,
    is_associative,
    iter_polymorphisms,
    iter_solutions,
    satisfies,
    verify_assignment,
)
from homlab.polymorphisms.majority_test import MajorityTestResult, majority_test_pc

__all__ = [
    "Operation",
    "affine_maltsev",
    "boolean_majority",
    "boolean_minority",
    "constant",
    "cyclic_composition",
    "depends_on",
    "essential_positions",
    "first_on_distinct_majority",
    "from_rows",
    "is_essentially_unary",
    "is_polymorphism",
    "maximum",
    "median",
    "minimum",
    "minority_first_on_distinct",
    "minority_two_on_distinct",
    "projection",
    "Identity",
    "IdentitySystem",
    "Term",
    "check_identities",
    "parse_term",
    "PolymorphismKind",
    "condition",
    "IndicatorInstance",
    "indicator_instance",
    "Outcome",
    "PolymorphismResult",
    "find_polymorphism",
    "find_special",
    "is_associative",
    "iter_polymorphisms",
    "iter_solutions",
    "satisfies",
    "verify_assignment",
    "MajorityTestResult",
    "majority_test_pc",
]
