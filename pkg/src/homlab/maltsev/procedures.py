"""The three procedures on compact representations: Nonempty, Fix-values and Next.

Positions are 1-based throughout, matching ``Fork.position``. A representation R'
stands for R = <R'>_m; none of the procedures materialises R.
"""

import logging
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from homlab.logic.relation import Relation
from homlab.maltsev.forks import CompactRep, Row, check_representation, fork_witnesses, require_maltsev
from homlab.polymorphisms.operation import Operation

logger = logging.getLogger(__name__)

# Representations up to this many tuples of A^n are checked against their closure
# when debug logging is on.
DEBUG_CHECK_LIMIT = 10_000


def _ternary(m: Operation) -> Callable[[int, int, int], int]:
    table, n = m.table, m.domain_size
    return lambda x, y, z: table[(x * n + y) * n + z]


def _zero_based(positions: Sequence[int], arity: int) -> Tuple[int, ...]:
    result = []
    for i in positions:
        if not 1 <= i <= arity:
            raise ValueError(f"Position {i} is out of range 1..{arity}")
        result.append(i - 1)
    return tuple(result)


def _target_set(s, k: int, domain_size: int) -> FrozenSet[Row]:
    if isinstance(s, Relation):
        if s.arity != k:
            raise ValueError(f"Relation of arity {s.arity} does not match {k} positions")
        return s.tuples
    return Relation.of(k, domain_size, s).tuples


def _nonempty(
    rows: Iterable[Row], positions: Tuple[int, ...], targets: FrozenSet[Row], m: Operation
) -> Optional[Row]:
    universe: List[Row] = sorted(set(rows))
    for row in universe:
        if tuple(row[i] for i in positions) in targets:
            return row
    apply = _ternary(m)
    seen = {tuple(row[i] for i in positions) for row in universe}
    start = 0
    while True:
        size = len(universe)
        for r, s, t in product(range(size), repeat=3):
            if r < start and s < start and t < start:
                continue
            if r == s or s == t:
                continue
            x, y, z = universe[r], universe[s], universe[t]
            key = tuple(apply(x[i], y[i], z[i]) for i in positions)
            if key in seen:
                continue
            image = tuple(apply(a, b, c) for a, b, c in zip(x, y, z))
            if key in targets:
                return image
            seen.add(key)
            universe.append(image)
        if len(universe) == size:
            return None
        start = size


def nonempty(rep: CompactRep, positions: Sequence[int], s, m: Operation) -> Optional[Row]:
    """A tuple t of R = <rep>_m whose projection onto ``positions`` lies in s, or None.

    U starts as rep and grows by m(r, s, t) only while that adds a new projection;
    since projections of U end up being exactly those of R, the answer is exact.

    Args:
        rep: Compact representation of R
        positions: 1-based coordinates i_1, ..., i_k (repetitions allowed)
        s: Relation of arity k, or an iterable of k-tuples
        m: Maltsev operation preserving R and s

    Returns:
        A tuple of R, or None when no tuple projects into s

    Raises:
        ValueError: If m is not Maltsev, a position is out of range, or s is not
            preserved by m

    Examples:
        >>> from homlab.polymorphisms.operation import boolean_minority
        >>> rep = CompactRep.of(2, 2, [(0, 0), (1, 1)])
        >>> nonempty(rep, [1], [(1,)], boolean_minority())
        (1, 1)
        >>> nonempty(rep, [1, 2], [(0, 1)], boolean_minority()) is None
        True
    """
    require_maltsev(m)
    index = _zero_based(positions, rep.arity)
    targets = _target_set(s, len(index), rep.domain_size)
    if not Relation(len(index), rep.domain_size, targets).is_preserved_by(m):
        raise ValueError(f"The target relation is not preserved by {m.label}")
    return _nonempty(rep.tuples, index, targets, m)


def fix_value_rows(rows: FrozenSet[Row], arity: int, values: Sequence[int], m: Operation) -> FrozenSet[Row]:
    """Row-level Fix-values; positions are 0-based and m is trusted."""
    apply = _ternary(m)
    current = rows
    for j, c in enumerate(values):
        following = set()
        for fork, (s, t) in sorted(fork_witnesses(current, arity).items()):
            i = fork.position - 1
            r = _nonempty(current, (j, i), frozenset({(c, fork.a)}), m)
            if r is None:
                continue
            if i > j or fork.a == fork.b == values[i]:
                following.add(r)
                following.add(tuple(apply(x, y, z) for x, y, z in zip(r, s, t)))
        current = frozenset(following)
        if not current:
            break
    return current


def fix_values(rep: CompactRep, values: Sequence[int], m: Operation) -> CompactRep:
    """A compact representation of R restricted to t_1 = c_1, ..., t_k = c_k.

    Stage j keeps, for every fork (i, a, b) of the stage-j representation, a tuple
    r with r_j = c_j and r_i = a together with m(r, s, t) for the witnesses s, t of
    the fork, provided the fork survives the pin.

    Raises:
        ValueError: If m is not Maltsev, more values than coordinates are given, or a
            value is outside the domain

    Examples:
        >>> from homlab.polymorphisms.operation import boolean_minority
        >>> fix_values(CompactRep.of(2, 2, [(0, 0), (1, 1)]), [1], boolean_minority()).sorted()
        [(1, 1)]
    """
    require_maltsev(m)
    if len(values) > rep.arity:
        raise ValueError(f"Cannot fix {len(values)} values of a {rep.arity}-ary relation")
    if any(not 0 <= c < rep.domain_size for c in values):
        raise ValueError(f"Values {tuple(values)} lie outside 0..{rep.domain_size - 1}")
    result = CompactRep(rep.arity, rep.domain_size, fix_value_rows(rep.tuples, rep.arity, tuple(values), m))
    debug_check(result, m)
    return result


def next_rows(
    rows: FrozenSet[Row],
    arity: int,
    domain_size: int,
    positions: Tuple[int, ...],
    targets: FrozenSet[Row],
    m: Operation,
) -> FrozenSet[Row]:
    """Row-level Next; positions are 0-based and m is trusted."""
    result = set()
    pinned: Dict[Row, FrozenSet[Row]] = {}
    for i, a, b in product(range(arity), range(domain_size), range(domain_size)):
        index = positions + (i,)
        t = _nonempty(rows, index, frozenset(row + (a,) for row in targets), m)
        if t is None:
            continue
        prefix = t[:i]
        if prefix not in pinned:
            pinned[prefix] = fix_value_rows(rows, arity, prefix, m)
        u = _nonempty(pinned[prefix], index, frozenset(row + (b,) for row in targets), m)
        if u is not None:
            result.add(t)
            result.add(u)
    return frozenset(result)


def next_representation(rep: CompactRep, positions: Sequence[int], s, m: Operation) -> CompactRep:
    """A compact representation of R* = {t in R : (t_{i_1}, ..., t_{i_k}) in s}.

    For each fork (i, a, b), scanned lexicographically, Nonempty finds t in R* with
    t_i = a, then a second call on R pinned to t_1..t_{i-1} finds t' in R* with
    t'_i = b. Both are kept when they exist.

    Raises:
        ValueError: If m is not Maltsev, a position is out of range or s is not
            preserved by m

    Examples:
        >>> from homlab.polymorphisms.operation import boolean_minority
        >>> square = CompactRep.full(2, 2)
        >>> next_representation(square, [1, 2], [(0, 0), (1, 1)], boolean_minority()).sorted()
        [(0, 0), (1, 1)]
    """
    require_maltsev(m)
    index = _zero_based(positions, rep.arity)
    targets = _target_set(s, len(index), rep.domain_size)
    if not Relation(len(index), rep.domain_size, targets).is_preserved_by(m):
        raise ValueError(f"The constraint relation is not preserved by {m.label}")
    rows = next_rows(rep.tuples, rep.arity, rep.domain_size, index, targets, m)
    result = CompactRep(rep.arity, rep.domain_size, rows)
    debug_check(result, m)
    return result


def debug_check(rep: CompactRep, m: Operation) -> None:
    if logger.isEnabledFor(logging.DEBUG) and rep.domain_size ** rep.arity <= DEBUG_CHECK_LIMIT:
        check_representation(rep, m)
