"""The polynomial-time solver for templates with a Maltsev polymorphism."""

import logging
from dataclasses import dataclass
from typing import Optional

from homlab.errors import VerificationError
from homlab.logic.relation import Relation
from homlab.maltsev.forks import CompactRep, require_maltsev
from homlab.maltsev.procedures import debug_check, fix_value_rows, next_rows
from homlab.polymorphisms.operation import Operation, is_polymorphism
from homlab.structures.structure import Mapping, Structure, check_same_signature, ensure_valid, is_homomorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MaltsevResult:
    """Outcome of the Maltsev solver.

    Attributes:
        satisfiable: True iff the instance maps to the template
        witness: The lexicographically least solution when satisfiable
        representation: Compact representation of the full solution set
        constraints: Number of constraints added before the answer was known
    """

    satisfiable: bool
    witness: Optional[Mapping]
    representation: CompactRep
    constraints: int


def check_maltsev_polymorphism(m: Operation, template: Structure) -> None:
    """Raises ValueError unless m is a Maltsev polymorphism of the template."""
    if m.domain_size != template.size:
        raise ValueError(f"{m.label} acts on {m.domain_size} elements, the template has {template.size}")
    require_maltsev(m)
    if not is_polymorphism(m, template):
        raise ValueError(f"{m.label} is not a polymorphism of {template.name or 'the template'}")


def solve(instance: Structure, template: Structure, m: Operation) -> MaltsevResult:
    """Decide instance -> template using a Maltsev polymorphism m of the template.

    Starts from a compact representation of A^n (n the number of instance
    elements) and adds the constraints one by one in input order. The solution set
    is empty iff the final representation is. A witness is read off by pinning the
    variables one at a time to the least value that keeps the representation
    nonempty, and is checked before it is returned.

    Raises:
        ValueError: If m is not a Maltsev polymorphism of the template
        SignatureMismatchError: If the signatures differ
        VerificationError: If the reconstructed witness is not a homomorphism

    Examples:
        >>> from homlab.structures.library import parity_template
        >>> from homlab.polymorphisms.operation import boolean_minority
        >>> x = Structure(parity_template().signature, 3, {"L0": [], "L1": [(0, 1, 2)]})
        >>> solve(x, parity_template(), boolean_minority()).witness.table
        (0, 0, 1)
    """
    ensure_valid(instance)
    ensure_valid(template)
    check_same_signature(instance, template)
    check_maltsev_polymorphism(m, template)
    n, size = instance.size, template.size
    rep = CompactRep.full(n, size)
    added = 0
    for symbol, scope in instance.iter_tuples():
        allowed = Relation.from_structure(template, symbol).tuples
        rows = next_rows(rep.tuples, n, size, tuple(scope), allowed, m)
        rep = CompactRep(n, size, rows)
        debug_check(rep, m)
        added += 1
        logger.debug("After %s%s: %d tuples in the representation", symbol, scope, len(rep))
        if rep.is_empty:
            logger.info("No solutions after %d constraints", added)
            return MaltsevResult(False, None, rep, added)
    witness = _least_solution(rep, m)
    if not is_homomorphism(witness, instance, template):
        raise VerificationError(f"Reconstructed witness {witness.table} is not a homomorphism")
    return MaltsevResult(True, witness, rep, added)


def _least_solution(rep: CompactRep, m: Operation) -> Mapping:
    rows = rep.tuples
    values = []
    for _ in range(rep.arity):
        for a in range(rep.domain_size):
            pinned = fix_value_rows(rows, rep.arity, tuple(values) + (a,), m)
            if pinned:
                values.append(a)
                rows = pinned
                break
        else:
            raise VerificationError(f"No value extends the partial solution {tuple(values)}")
    return Mapping(tuple(values), rep.domain_size)
