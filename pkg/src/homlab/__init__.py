"""homlab - A toolkit for finite-domain CSPs and homomorphism problems.

This package provides functionality to:
- Decide homomorphisms by backtracking and by local consistency
- Compute cores, powerset structures and automorphism orbits
- Search for polymorphisms satisfying identity systems
- Decide pp-definability and build binary encodings
- Solve templates with a Maltsev polymorphism in polynomial time
- Classify the complexity of CSP(B) for several template families
"""

from homlab.engine import (
    solve_instance,
    solve_many,
    render_trace,
)

from homlab.config import Guards, DEFAULT_GUARDS
from homlab.errors import (
    HomlabError,
    FormatError,
    GuardExceededError,
    SignatureMismatchError,
    VerificationError,
)
from homlab.structures import (
    Signature,
    Structure,
    Mapping,
    core,
    is_homomorphism,
)
from homlab.search import TraceNode, search_hom
from homlab.consistency import ac, pc, sac
from homlab.polymorphisms import (
    Operation,
    IdentitySystem,
    PolymorphismKind,
    find_polymorphism,
    find_special,
    is_polymorphism,
)
from homlab.logic import PPFormula, Relation, is_pp_definable
from homlab.powerset import ac_solvability, powerset_structure
from homlab.maltsev import CompactRep, solve as maltsev_solve
from homlab.classify import Complexity, Verdict, dichotomy
from homlab.io import FormatReaderRegistry, load_structure
from homlab.reports import BaseReportFormatter, create_formatter
from homlab.plotting import TreePlotter

__version__ = "0.1.0"

__all__ = [
    # Main API functions
    "solve_instance",
    "solve_many",
    "render_trace",

    # Configuration and errors
    "Guards",
    "DEFAULT_GUARDS",
    "HomlabError",
    "FormatError",
    "GuardExceededError",
    "SignatureMismatchError",
    "VerificationError",

    # Structures and solving
    "Signature",
    "Structure",
    "Mapping",
    "core",
    "is_homomorphism",
    "TraceNode",
    "search_hom",
    "ac",
    "pc",
    "sac",

    # Polymorphisms and definability
    "Operation",
    "IdentitySystem",
    "PolymorphismKind",
    "find_polymorphism",
    "find_special",
    "is_polymorphism",
    "PPFormula",
    "Relation",
    "is_pp_definable",
    "ac_solvability",
    "powerset_structure",

    # Maltsev templates
    "CompactRep",
    "maltsev_solve",

    # Classification
    "Complexity",
    "Verdict",
    "dichotomy",

    # Formats and reports
    "FormatReaderRegistry",
    "load_structure",
    "BaseReportFormatter",
    "create_formatter",

    # Visualization
    "TreePlotter",

    # Version
    "__version__",
]
