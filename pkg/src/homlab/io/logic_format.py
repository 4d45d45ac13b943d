"""Identity systems and pp formulas.

Identity systems are ';'-separated parts, on one line or several:

    sym t 3 ; id t(x,x,y) = t(x,y,x) ; id t(y,x,x) = x

A ``name <label>`` part is optional. Formulas use the pp syntax of
``PPFormula.parse`` and may span several lines.
"""

from typing import List, Tuple

from homlab.errors import FormatError
from homlab.io.base import BaseFormatReader, Line, parse_int
from homlab.logic.formula import PPFormula
from homlab.polymorphisms.identities import Identity, IdentitySystem


class IdentitySystemReader(BaseFormatReader):
    """Reads ``sym``/``id`` documents."""

    keyword = "sym"

    def parse(self, lines: List[Line], source: str) -> IdentitySystem:
        symbols: List[Tuple[str, int]] = []
        identities: List[Identity] = []
        name = ""
        for number, text in lines:
            for part in (p.strip() for p in text.split(";")):
                if not part:
                    continue
                keyword, _, rest = part.partition(" ")
                if keyword == "sym":
                    tokens = rest.split()
                    if len(tokens) != 2:
                        raise FormatError(f"Expected 'sym <name> <arity>', got '{part}'", source, number)
                    symbols.append((tokens[0], parse_int(tokens[1], "arity", source, number, minimum=1)))
                elif keyword == "id":
                    try:
                        identities.append(Identity.parse(rest))
                    except ValueError as e:
                        raise FormatError(str(e), source, number) from None
                elif keyword == "name":
                    name = rest.strip()
                else:
                    raise FormatError(f"Unexpected part '{part}'", source, number)
        try:
            return IdentitySystem(tuple(symbols), tuple(identities), name)
        except ValueError as e:
            raise FormatError(str(e), source, lines[0][0]) from None


class FormulaReader(BaseFormatReader):
    """Reads ``pp`` formulas."""

    keyword = "pp"

    def parse(self, lines: List[Line], source: str) -> PPFormula:
        try:
            return PPFormula.parse(" ".join(text for _, text in lines))
        except ValueError as e:
            raise FormatError(str(e), source, lines[0][0]) from None


def format_system(system: IdentitySystem) -> str:
    text = str(system)
    return f"{text} ; name {system.name}" if system.name else text


def format_formula(phi: PPFormula) -> str:
    return str(phi)
