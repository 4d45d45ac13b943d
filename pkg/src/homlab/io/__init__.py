"""Text formats: readers, writers and typed loaders."""

from typing import Dict, FrozenSet, Optional, Tuple

from homlab.errors import FormatError
from homlab.io.base import BaseFormatReader, FormatReaderRegistry, read_text, significant_lines
from homlab.io.structure_format import StructureDocument, StructureReader, format_structure
from homlab.io.operation_format import OperationReader, RelationReader, format_operation, format_relation
from homlab.io.logic_format import FormulaReader, IdentitySystemReader, format_formula, format_system
from homlab.logic.formula import PPFormula
from homlab.logic.relation import Relation
from homlab.polymorphisms.identities import IdentitySystem
from homlab.polymorphisms.operation import Operation
from homlab.structures.library import named_structure
from homlab.structures.structure import Structure

# A leading '@' names a library structure instead of a file, e.g. '@K3' or '@pss'.
NAMED_PREFIX = "@"


def default_registry() -> FormatReaderRegistry:
    registry = FormatReaderRegistry()
    registry.register(StructureReader())
    registry.register(OperationReader())
    registry.register(RelationReader())
    registry.register(IdentitySystemReader())
    registry.register(FormulaReader())
    return registry


def _load(path: str, expected: type, what: str):
    result = default_registry().read_file(path)
    if not isinstance(result, expected):
        source = "<stdin>" if path == "-" else path
        raise FormatError(f"Expected {what}, got {type(result).__name__}", source)
    return result


def load_instance(path: str) -> Tuple[Structure, Optional[Dict[int, FrozenSet[int]]]]:
    """A structure plus its fix/allow lists from a file, '-' or an '@name' shortcut."""
    if path.startswith(NAMED_PREFIX):
        try:
            return named_structure(path[len(NAMED_PREFIX):]), None
        except ValueError as e:
            raise FormatError(str(e), path) from None
    document = _load(path, StructureDocument, "a structure")
    return document.structure, document.lists


def load_structure(path: str) -> Structure:
    return load_instance(path)[0]


def load_operation(path: str) -> Operation:
    return _load(path, Operation, "an operation")


def load_relation(path: str) -> Relation:
    return _load(path, Relation, "a relation")


def load_system(path: str) -> IdentitySystem:
    return _load(path, IdentitySystem, "an identity system")


def load_formula(path: str) -> PPFormula:
    return _load(path, PPFormula, "a pp formula")


__all__ = [
    "BaseFormatReader",
    "FormatReaderRegistry",
    "read_text",
    "significant_lines",
    "StructureDocument",
    "StructureReader",
    "format_structure",
    "OperationReader",
    "RelationReader",
    "format_operation",
    "format_relation",
    "FormulaReader",
    "IdentitySystemReader",
    "format_formula",
    "format_system",
    "NAMED_PREFIX",
    "default_registry",
    "load_instance",
    "load_structure",
    "load_operation",
    "load_relation",
    "load_system",
    "load_formula",
]
