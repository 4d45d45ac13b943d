"""Named polymorphism conditions compiled to identity systems."""

from enum import Enum
from typing import List, Optional, Sequence, Tuple

from homlab.polymorphisms.identities import Identity, IdentitySystem, Term


class PolymorphismKind(str, Enum):
    MAJORITY = "majority"
    QUASI_MAJORITY = "quasi-majority"
    MALTSEV = "maltsev"
    MINORITY = "minority"
    SEMILATTICE = "semilattice"
    TOTALLY_SYMMETRIC = "totally-symmetric"
    CYCLIC = "cyclic"
    WNU = "wnu"
    WNU_3_4 = "wnu-3-4"
    SIGGERS_4 = "siggers4"
    SIGGERS_6 = "siggers6"
    PQ = "pq"
    NU = "nu"

    @classmethod
    def parse(cls, value: str) -> "PolymorphismKind":
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(
                f"Unknown polymorphism kind '{value}', expected one of {[k.value for k in cls]}"
            ) from None


# kinds whose arity is a parameter
PARAMETRISED = {
    PolymorphismKind.TOTALLY_SYMMETRIC: 2,
    PolymorphismKind.CYCLIC: 2,
    PolymorphismKind.WNU: 3,
    PolymorphismKind.NU: 3,
}


def _f(*args: str, symbol: str = "f") -> Term:
    return Term.app(symbol, *args)


def _near_constant(k: int, position: int, x: str = "x", y: str = "y") -> Tuple[str, ...]:
    """(x,...,x) with y at position."""
    return tuple(y if i == position else x for i in range(k))


def _chain(terms: Sequence[Term]) -> List[Identity]:
    return [Identity(a, b) for a, b in zip(terms, terms[1:])]


def _wnu_identities(k: int, symbol: str) -> List[Identity]:
    return _chain([_f(*_near_constant(k, i), symbol=symbol) for i in range(k)])


def majority() -> IdentitySystem:
    x = Term.var("x")
    return IdentitySystem(
        (("f", 3),),
        (Identity(_f("x", "x", "y"), x), Identity(_f("x", "y", "x"), x), Identity(_f("y", "x", "x"), x)),
        "majority",
    )


def quasi_majority() -> IdentitySystem:
    terms = [_f("x", "x", "y"), _f("x", "y", "x"), _f("y", "x", "x"), _f("x", "x", "x")]
    return IdentitySystem((("f", 3),), tuple(_chain(terms)), "quasi-majority")


def maltsev() -> IdentitySystem:
    y = Term.var("y")
    return IdentitySystem((("f", 3),), (Identity(_f("y", "x", "x"), y), Identity(_f("x", "x", "y"), y)), "maltsev")


def minority() -> IdentitySystem:
    y = Term.var("y")
    return IdentitySystem(
        (("f", 3),),
        (Identity(_f("y", "x", "x"), y), Identity(_f("x", "y", "x"), y), Identity(_f("x", "x", "y"), y)),
        "minority",
    )


def commutative_idempotent() -> IdentitySystem:
    """The height-one part of the semilattice laws; associativity is checked separately."""
    return IdentitySystem(
        (("f", 2),),
        (Identity(_f("x", "y"), _f("y", "x")), Identity(_f("x", "x"), Term.var("x"))),
        "semilattice",
    )


def totally_symmetric(k: int) -> IdentitySystem:
    """Adjacent transpositions plus the multiplicity shift f(x,x,y,...) = f(x,y,y,...).

    Together they identify any two argument tuples with the same set of values.
    """
    _check_arity(k, 2)
    names = tuple(f"x{i + 1}" for i in range(k))
    identities = []
    for i in range(k - 1):
        swapped = names[:i] + (names[i + 1], names[i]) + names[i + 2:]
        identities.append(Identity(_f(*names), _f(*swapped)))
    if k >= 3:
        rest = tuple(f"z{i}" for i in range(3, k + 1))
        identities.append(Identity(_f("x", "x", "y", *rest), _f("x", "y", "y", *rest)))
    return IdentitySystem((("f", k),), tuple(identities), f"totally-symmetric-{k}")


def cyclic(k: int) -> IdentitySystem:
    _check_arity(k, 2)
    names = tuple(f"x{i + 1}" for i in range(k))
    return IdentitySystem((("f", k),), (Identity(_f(*names), _f(*(names[1:] + names[:1]))),), f"cyclic-{k}")


def wnu(k: int) -> IdentitySystem:
    _check_arity(k, 3)
    return IdentitySystem((("f", k),), tuple(_wnu_identities(k, "f")), f"wnu-{k}")


def wnu_3_4() -> IdentitySystem:
    """A ternary WNU f and a 4-ary WNU g with f(y,x,x) = g(y,x,x,x)."""
    link = Identity(_f("y", "x", "x"), _f("y", "x", "x", "x", symbol="g"))
    identities = _wnu_identities(3, "f") + _wnu_identities(4, "g") + [link]
    return IdentitySystem((("f", 3), ("g", 4)), tuple(identities), "wnu-3-4")


def siggers_4() -> IdentitySystem:
    return IdentitySystem(
        (("s", 4),), (Identity(Term.app("s", "x", "x", "y", "z"), Term.app("s", "y", "z", "z", "x")),), "siggers4"
    )


def siggers_6() -> IdentitySystem:
    return IdentitySystem(
        (("s", 6),),
        (Identity(Term.app("s", "x", "y", "x", "z", "y", "z"), Term.app("s", "y", "x", "z", "x", "z", "y")),),
        "siggers6",
    )


def pq() -> IdentitySystem:
    return IdentitySystem.build(
        (("p", 3), ("q", 3)),
        ["q(y,x,x) = q(x,x,y)", "q(x,x,y) = p(x,y,y)", "p(x,y,x) = q(x,y,x)"],
        "pq",
    )


def near_unanimity(k: int) -> IdentitySystem:
    """f(x,...,x,y) = ... = f(y,x,...,x) = f(x,...,x), in height-one form."""
    _check_arity(k, 3)
    diagonal = _f(*(["x"] * k))
    identities = [Identity(_f(*_near_constant(k, i)), diagonal) for i in range(k - 1, -1, -1)]
    return IdentitySystem((("f", k),), tuple(identities), f"nu-{k}")


def _check_arity(k: int, minimum: int) -> None:
    if k < minimum:
        raise ValueError(f"Arity must be at least {minimum}, got {k}")


def condition(kind: PolymorphismKind, arity: Optional[int] = None) -> IdentitySystem:
    """The identity system of a named condition.

    Args:
        kind: Which condition
        arity: Arity for totally symmetric, cyclic, WNU and NU conditions

    Raises:
        ValueError: If an arity is missing or out of range
    """
    kind = PolymorphismKind(kind)
    if kind in PARAMETRISED:
        if arity is None:
            raise ValueError(f"Condition '{kind.value}' needs an arity")
        builder = {
            PolymorphismKind.TOTALLY_SYMMETRIC: totally_symmetric,
            PolymorphismKind.CYCLIC: cyclic,
            PolymorphismKind.WNU: wnu,
            PolymorphismKind.NU: near_unanimity,
        }[kind]
        return builder(arity)
    return {
        PolymorphismKind.MAJORITY: majority,
        PolymorphismKind.QUASI_MAJORITY: quasi_majority,
        PolymorphismKind.MALTSEV: maltsev,
        PolymorphismKind.MINORITY: minority,
        PolymorphismKind.SEMILATTICE: commutative_idempotent,
        PolymorphismKind.WNU_3_4: wnu_3_4,
        PolymorphismKind.SIGGERS_4: siggers_4,
        PolymorphismKind.SIGGERS_6: siggers_6,
        PolymorphismKind.PQ: pq,
    }[kind]()
