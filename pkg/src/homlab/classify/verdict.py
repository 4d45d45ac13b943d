"""Classifier verdicts and their certificates."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from homlab.polymorphisms.operation import Operation
from homlab.structures.cores import CoreResult


class Complexity(str, Enum):
    P = "P"
    NP_COMPLETE = "NP-complete"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """A complexity verdict for CSP(B) with the evidence it rests on.

    Attributes:
        complexity: P, NP-complete, or inconclusive when a guard stopped a stage
        reason: One-line summary, e.g. "bipartite" or "no Siggers polymorphism"
        operations: Witness polymorphisms by symbol or class name
        colouring: A 2-colouring, for bipartite graphs
        vertices: A loop vertex or an odd cycle
        core: The core the decision was made for
        classes: Every tractable class that applies (Boolean templates)
        stage: The pipeline stage that decided, or that hit a guard
    """

    complexity: Complexity
    reason: str
    operations: Dict[str, Operation] = field(default_factory=dict)
    colouring: Optional[Dict[int, int]] = None
    vertices: Tuple[int, ...] = ()
    core: Optional[CoreResult] = None
    classes: Tuple[str, ...] = ()
    stage: str = ""

    @property
    def tractable(self) -> bool:
        return self.complexity is Complexity.P

    @property
    def decided(self) -> bool:
        return self.complexity is not Complexity.INCONCLUSIVE

    def summary(self) -> str:
        return f"{self.complexity.value}: {self.reason}"


@dataclass(frozen=True)
class PropertyVerdict:
    """Whether a template has a property (bounded width, tree duality); None if undecided."""

    holds: Optional[bool]
    reason: str
    operations: Dict[str, Operation] = field(default_factory=dict)
    core: Optional[CoreResult] = None
    stage: str = ""

    @property
    def decided(self) -> bool:
        return self.holds is not None

    def summary(self) -> str:
        label = {True: "yes", False: "no", None: "inconclusive"}[self.holds]
        return f"{label}: {self.reason}"


def inconclusive(stage: str, error: Exception) -> Verdict:
    return Verdict(Complexity.INCONCLUSIVE, f"{stage} stopped: {error}", stage=stage)

