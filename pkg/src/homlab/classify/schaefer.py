"""Schaefer's classification of Boolean templates."""

import logging
from itertools import product
from typing import Dict, List, Optional, Tuple

from homlab.classify.verdict import Complexity, Verdict
from homlab.polymorphisms.operation import (
    Operation,
    boolean_majority,
    boolean_minority,
    constant,
    maximum,
    minimum,
)
from homlab.structures.structure import Structure, ensure_valid

logger = logging.getLogger(__name__)

# Counterexample to preservation: symbol, argument rows, image outside the relation.
Violation = Tuple[str, Tuple[Tuple[int, ...], ...], Tuple[int, ...]]


def schaefer_operations() -> Dict[str, Operation]:
    """The class operations in reporting order."""
    return {
        "const0": constant(1, 2, 0),
        "const1": constant(1, 2, 1),
        "horn": minimum(2),
        "dual-horn": maximum(2),
        "bijunctive": boolean_majority(),
        "affine": boolean_minority(),
    }


def preservation_violation(f: Operation, b: Structure) -> Optional[Violation]:
    """The first choice of tuples (in sorted order) that f maps outside its relation."""
    for symbol in b.signature.names:
        relation = b.relation(symbol)
        rows = b.sorted_relation(symbol)
        for choice in product(rows, repeat=f.arity):
            image = f.apply_columns(choice)
            if image not in relation:
                return symbol, tuple(choice), image
    return None


def schaefer(b: Structure) -> Verdict:
    """Classify a Boolean template by testing the six class operations.

    Every class whose operation is a polymorphism is reported; the classes are not
    mutually exclusive. When none applies the template is NP-complete, and the
    certificate lists one violation per class.

    Raises:
        ValueError: If b is not over {0,1}

    Examples:
        >>> from homlab.structures.library import parity_template
        >>> schaefer(parity_template()).classes
        ('affine',)
    """
    ensure_valid(b)
    if b.size != 2:
        raise ValueError(f"Schaefer's classification needs a Boolean template, got domain size {b.size}")
    passing: List[str] = []
    operations: Dict[str, Operation] = {}
    failures: List[str] = []
    for name, f in schaefer_operations().items():
        violation = preservation_violation(f, b)
        if violation is None:
            passing.append(name)
            operations[name] = f
        else:
            symbol, rows, image = violation
            failures.append(f"{name}: {symbol}{rows} -> {image}")
    if passing:
        logger.info("Boolean template is in %s", ", ".join(passing))
        return Verdict(Complexity.P, ", ".join(passing), operations, classes=tuple(passing), stage="schaefer")
    return Verdict(Complexity.NP_COMPLETE, "; ".join(failures), stage="schaefer")
