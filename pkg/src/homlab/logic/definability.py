"""Deciding pp-definability through polymorphisms.

A relation R is pp-definable in B iff every polymorphism of B preserves R. Two
stages decide it:

1. A cheap refuter enumerates polymorphisms of arity at most 3 and looks for one
   that breaks R.
2. The witness construction works on the power B^w of the tuples t_1..t_w chosen
   so far. The canonical query of B^w, with the column elements c_i = (t_1[i], ...,
   t_w[i]) made free, defines {(h(c_1), ..., h(c_k)) : h a w-ary polymorphism}.
   This contains the chosen tuples. A tuple outside R gives a polymorphism breaking
   R. A tuple of R still missing is added to the chosen ones. Once the defined
   relation equals R, the formula is the witness.

Step 2 starts with a single tuple, so w stays far below |R| whenever a few tuples
generate R under the polymorphisms.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from homlab.config import DEFAULT_GUARDS, Guards
from homlab.errors import VerificationError
from homlab.logic.formula import Atom, PPFormula
from homlab.logic.relation import Relation
from homlab.logic.semantics import defined_relation
from homlab.polymorphisms.operation import Operation, is_polymorphism
from homlab.polymorphisms.search import iter_polymorphisms
from homlab.search.backtracking import search_hom
from homlab.structures.constructions import encode_tuple, power
from homlab.structures.structure import Structure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DefinabilityResult:
    """Outcome of a pp-definability check.

    Exactly one of ``witness`` (when definable) and ``counterexample`` (a
    polymorphism of B not preserving R) is set.
    """

    definable: bool
    witness: Optional[PPFormula] = None
    counterexample: Optional[Operation] = None


def closure_refuter(
    r: Relation, b: Structure, max_arity: int = 3, guards: Guards = DEFAULT_GUARDS
) -> Optional[Operation]:
    """A polymorphism of b of arity at most max_arity that does not preserve r, if any.

    Arities whose indicator instance exceeds the guards are skipped.
    """
    for arity in range(1, max_arity + 1):
        if b.size ** arity > guards.max_states or arity > guards.max_arity:
            logger.info("Refuter skips arity %d: indicator instance too large", arity)
            continue
        for f in iter_polymorphisms(b, arity, guards=guards, limit=guards.max_solutions):
            if not r.is_preserved_by(f):
                logger.info("Polymorphism %s of arity %d breaks the relation", f.table, arity)
                return f
    return None


def _column_formula(
    chosen: List[Tuple[int, ...]], b: Structure, arity: int, guards: Guards
) -> Tuple[PPFormula, Structure, List[int]]:
    w = len(chosen)
    bw = power(b, w, guards)
    columns = [encode_tuple([t[i] for t in chosen], b.size) for i in range(arity)]
    free = tuple(f"x{i + 1}" for i in range(arity))
    names: Dict[int, str] = {}
    equalities = []
    for i, c in enumerate(columns):
        if c in names:
            equalities.append(Atom.equality(names[c], free[i]))
        else:
            names[c] = free[i]
    bound = []
    for e in bw.elements:
        if e not in names:
            names[e] = f"y{e}"
            bound.append(names[e])
    atoms = [Atom.relation(symbol, *(names[v] for v in t)) for symbol, t in bw.iter_tuples()]
    return PPFormula(free, tuple(bound), tuple(atoms + equalities)), bw, columns


def is_pp_definable(
    r: Relation,
    b: Structure,
    *,
    guards: Guards = DEFAULT_GUARDS,
    refute_first: bool = True,
) -> DefinabilityResult:
    """Decide whether r is pp-definable in b.

    Args:
        r: Relation over b's domain
        b: Structure
        guards: max_pp_states bounds |B|^w, max_states the power's tuples
        refute_first: Run the polymorphism refuter before building powers

    Returns:
        DefinabilityResult; a witness satisfies defined_relation(witness, b) == r, a
        counterexample is a polymorphism of b not preserving r (both checked)

    Raises:
        GuardExceededError: If a power B^w exceeds the caps
        ValueError: If r lives on another domain or has arity 0
    """
    if r.domain_size != b.size:
        raise ValueError(f"Relation domain {r.domain_size} does not match structure size {b.size}")
    if r.arity < 1:
        raise ValueError("Only relations of positive arity are supported")
    free = tuple(f"x{i + 1}" for i in range(r.arity))
    if not r.tuples:
        return _checked(DefinabilityResult(True, witness=PPFormula(free, (), (Atom.false(),))), r, b)

    if refute_first:
        f = closure_refuter(r, b, guards=guards)
        if f is not None:
            return _checked(DefinabilityResult(False, counterexample=f), r, b)

    target = r.sorted()
    chosen = [target[0]]
    while True:
        w = len(chosen)
        guards.check("max_pp_states", b.size ** w, f"|B|^{w} for the pp witness")
        formula, bw, columns = _column_formula(chosen, b, r.arity, guards)
        covered = set(chosen)
        missing = None
        for values in product(range(b.size), repeat=r.arity):
            if values in covered:
                continue
            lists: Dict[int, frozenset] = {}
            for c, v in zip(columns, values):
                lists[c] = lists.get(c, frozenset(range(b.size))) & {v}
            if any(not allowed for allowed in lists.values()):
                continue
            h = search_hom(bw, b, lists)
            if h is None:
                if values in r.tuples and missing is None:
                    missing = values
                continue
            if values not in r.tuples:
                f = Operation(w, b.size, h.table, name=f"pol{w}")
                return _checked(DefinabilityResult(False, counterexample=f), r, b)
            covered.add(values)
        if missing is None:
            logger.info("Witness formula over B^%d found", w)
            return _checked(DefinabilityResult(True, witness=formula), r, b)
        chosen.append(missing)
        logger.debug("Adding tuple %s; the power grows to B^%d", missing, len(chosen))


def _checked(result: DefinabilityResult, r: Relation, b: Structure) -> DefinabilityResult:
    if result.definable:
        if defined_relation(result.witness, b) != r:
            raise VerificationError("Witness formula does not define the relation")
    else:
        f = result.counterexample
        if not is_polymorphism(f, b) or r.is_preserved_by(f):
            raise VerificationError("Counterexample is not a polymorphism breaking the relation")
    return result
