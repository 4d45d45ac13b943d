"""Named structures used as templates, fixtures and CLI shortcuts."""

from itertools import product
from typing import Callable, Dict, Iterable, Sequence, Tuple

from homlab.structures.signature import Signature
from homlab.structures.structure import Structure


def complete_graph(n: int) -> Structure:
    """K_n as a symmetric loopless digraph."""
    return Structure.digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v], name=f"K{n}")


def cycle(n: int) -> Structure:
    """The undirected cycle C_n (n >= 3) as a symmetric digraph."""
    if n < 3:
        raise ValueError(f"Undirected cycles need at least 3 vertices, got {n}")
    return Structure.graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Structure:
    """The undirected path with n edges (n + 1 vertices)."""
    return Structure.graph(n + 1, [(i, i + 1) for i in range(n)], name=f"P{n}")


def directed_cycle(n: int) -> Structure:
    """The directed cycle on n vertices; n = 1 is a single loop."""
    return Structure.digraph(n, [(i, (i + 1) % n) for i in range(n)], name=f"DC{n}")


def directed_path(n: int) -> Structure:
    """The directed path with n edges."""
    return Structure.digraph(n + 1, [(i, i + 1) for i in range(n)], name=f"DP{n}")


def transitive_tournament(n: int) -> Structure:
    """T_n: vertices 0..n-1 with an edge u -> v whenever u < v."""
    return Structure.digraph(n, [(u, v) for u in range(n) for v in range(n) if u < v], name=f"T{n}")


def loop() -> Structure:
    return Structure.digraph(1, [(0, 0)], name="loop")


def edgeless(n: int) -> Structure:
    return Structure.digraph(n, [], name=f"I{n}")


def unbalanced_four_cycle() -> Structure:
    """The oriented 4-cycle 0->1->2->3 with 0->3: a core not solved by arc consistency."""
    return Structure.digraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], name="unbalanced-C4")


def relation_from_predicate(
    n: int, arity: int, predicate: Callable[..., bool]
) -> Tuple[Tuple[int, ...], ...]:
    return tuple(t for t in product(range(n), repeat=arity) if predicate(*t))


def boolean_structure(relations: Dict[str, Iterable[Sequence[int]]], name: str = "") -> Structure:
    """A structure over {0,1}; arities are read off the first tuple of each relation."""
    materialised = {k: [tuple(t) for t in v] for k, v in relations.items()}
    symbols = []
    for symbol, tuples in materialised.items():
        if not tuples:
            raise ValueError(f"Cannot infer the arity of empty relation '{symbol}'")
        symbols.append((symbol, len(tuples[0])))
    return Structure(Signature(tuple(symbols)), 2, materialised, name=name)


def affine_template(p: int, arity: int = 3) -> Structure:
    """(Z_p; R_0, ..., R_{p-1}) with R_c = {x_1 + ... + x_arity = c mod p}."""
    signature = Signature(tuple((f"R{c}", arity) for c in range(p)))
    relations = {
        f"R{c}": relation_from_predicate(p, arity, lambda *xs, c=c: sum(xs) % p == c)
        for c in range(p)
    }
    return Structure(signature, p, relations, name=f"Z{p}-lin{arity}")


def parity_template() -> Structure:
    """({0,1}; L_0, L_1) with L_i = {x + y + z = i mod 2}."""
    signature = Signature.of(("L0", 3), ("L1", 3))
    relations = {
        f"L{i}": relation_from_predicate(2, 3, lambda x, y, z, i=i: (x + y + z) % 2 == i)
        for i in (0, 1)
    }
    return Structure(signature, 2, relations, name="parity")


def pss_template() -> Structure:
    """The paper-scissors-stone template ({0,1,2}; C_3, R^=_3).

    C_3 is the directed 3-cycle a -> a+1 and R^=_3 holds for (x, y, z) with
    x in {0, 1} and y = z whenever x = 0.
    """
    signature = Signature.of(("C", 2), ("R", 3))
    relations = {
        "C": [(a, (a + 1) % 3) for a in range(3)],
        "R": relation_from_predicate(3, 3, lambda x, y, z: x in (0, 1) and (x != 0 or y == z)),
    }
    return Structure(signature, 3, relations, name="pss")


def graph_of_operation(table: Callable[..., int], n: int, arity: int, name: str = "") -> Structure:
    """The graph {(x_1, ..., x_k, f(x_1, ..., x_k))} of an operation, as one relation G."""
    signature = Signature.of(("G", arity + 1))
    tuples = [t + (table(*t),) for t in product(range(n), repeat=arity)]
    return Structure(signature, n, {"G": tuples}, name=name)


def affine_group_template(n: int) -> Structure:
    """The graph of x - y + z over Z_n (a 4-ary relation)."""
    return graph_of_operation(lambda x, y, z: (x - y + z) % n, n, 3, name=f"Z{n}-affine")


def cyclic_group_template(n: int) -> Structure:
    """(Z_n; S) with S = {(x, y, x + y mod n)}.

    With constants it has the same idempotent polymorphisms as the graph of
    x - y + z, with a ternary instead of a 4-ary relation.
    """
    signature = Signature.of(("S", 3))
    tuples = [(x, y, (x + y) % n) for x in range(n) for y in range(n)]
    return Structure(signature, n, {"S": tuples}, name=f"Z{n}-sum")


NAMED: Dict[str, Callable[[int], Structure]] = {
    "K": complete_graph,
    "C": cycle,
    "P": path,
    "DC": directed_cycle,
    "DP": directed_path,
    "T": transitive_tournament,
    "I": edgeless,
}


def named_structure(label: str) -> Structure:
    """Resolve shortcuts such as 'K3', 'C5', 'DC4', 'T3', 'pss', 'parity'.

    Examples:
        >>> named_structure("T3").size
        3
    """
    fixed = {"pss": pss_template, "parity": parity_template, "loop": loop, "unbalanced-C4": unbalanced_four_cycle}
    if label in fixed:
        return fixed[label]()
    prefix = label.rstrip("0123456789")
    digits = label[len(prefix):]
    if prefix in NAMED and digits:
        return NAMED[prefix](int(digits))
    if prefix == "Z" and digits:
        return affine_template(int(digits))
    raise ValueError(f"Unknown structure shortcut '{label}'")
