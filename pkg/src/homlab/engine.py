from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from homlab.consistency.arc import ac
from homlab.consistency.path import pc
from homlab.consistency.singleton import sac
from homlab.maltsev.solver import solve as maltsev_solve
from homlab.plotting import TreePlotter
from homlab.polymorphisms.operation import Operation
from homlab.search.backtracking import search_hom
from homlab.search.trace import TraceNode
from homlab.structures.structure import Mapping, Structure, check_same_signature, ensure_valid

METHODS = ("search", "ac", "pc", "sac", "maltsev")
VERDICT_ONLY = ("ac", "pc", "sac")

Lists = Optional[Dict[int, FrozenSet[int]]]


@dataclass(frozen=True)
class SolveOutcome:
    """Result of deciding one instance.

    ``accepted`` is exact for 'search' and 'maltsev'. For the consistency methods
    it only says that propagation did not reject; rejection is always correct.
    """

    label: str
    method: str
    accepted: bool
    homomorphism: Optional[Mapping] = None

    @property
    def verdict_only(self) -> bool:
        return self.method in VERDICT_ONLY

    @property
    def result(self) -> str:
        if self.verdict_only:
            return "accepted" if self.accepted else "rejected"
        return "homomorphism" if self.accepted else "no homomorphism"


def solve_instance(
    instance: Structure,
    template: Structure,
    *,
    method: str = "search",
    lists: Lists = None,
    maltsev: Optional[Operation] = None,
    trace: Optional[TraceNode] = None,
    label: str = "",
) -> SolveOutcome:
    """Decide instance -> template with one of the solving methods.

    This is the single dispatch point used by the command line, so every method
    sees the same validation.

    Args:
        instance: Instance structure
        template: Template structure with the same signature
        method: 'search' (backtracking), 'ac', 'pc', 'sac' (verdict only), or
            'maltsev' (needs ``maltsev``)
        lists: Optional candidate lists from fix/allow lines
        maltsev: Maltsev polymorphism of the template, for method 'maltsev'
        trace: Optional TraceNode receiving backtracking decisions
        label: Name reported with the outcome

    Returns:
        SolveOutcome

    Raises:
        ValueError: On an unknown method, a missing operation, or lists used
            with the Maltsev solver

    Examples:
        # Backtracking with a trace
        root = TraceNode.root("solve")
        outcome = solve_instance(cycle(5), complete_graph(3), trace=root)

        # Path consistency verdict
        outcome = solve_instance(g, transitive_tournament(3), method="pc")
    """
    ensure_valid(instance)
    ensure_valid(template)
    check_same_signature(instance, template)
    label = label or instance.name
    if method == "search":
        h = search_hom(instance, template, lists, trace=trace)
        return SolveOutcome(label, method, h is not None, h)
    if method == "ac":
        return SolveOutcome(label, method, ac(instance, template, lists) is not None)
    if method == "pc":
        return SolveOutcome(label, method, pc(instance, template, lists) is not None)
    if method == "sac":
        return SolveOutcome(label, method, sac(instance, template, lists) is not None)
    if method == "maltsev":
        if maltsev is None:
            raise ValueError("The Maltsev solver needs an operation")
        if lists:
            raise ValueError("The Maltsev solver does not take fix/allow lists")
        result = maltsev_solve(instance, template, maltsev)
        return SolveOutcome(label, method, result.satisfiable, result.witness)
    raise ValueError(f"Unknown method '{method}', expected one of {METHODS}")


def _solve_job(job: Tuple[str, Structure, Lists, Structure, str, Optional[Operation]]) -> SolveOutcome:
    label, instance, lists, template, method, maltsev = job
    return solve_instance(instance, template, method=method, lists=lists, maltsev=maltsev, label=label)


def solve_many(
    items: Sequence[Tuple[str, Structure, Lists]],
    template: Structure,
    *,
    method: str = "search",
    maltsev: Optional[Operation] = None,
    jobs: int = 1,
) -> List[SolveOutcome]:
    """Decide several instances against one template, reported in input order.

    With jobs > 1 the instances are distributed over a process pool.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")
    work = [(label, instance, lists, template, method, maltsev) for label, instance, lists in items]
    if jobs == 1 or len(work) < 2:
        return [_solve_job(job) for job in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_solve_job, work))


def render_trace(root: TraceNode, max_depth: Optional[int] = None) -> str:
    """Render a trace as an ASCII tree."""
    return TreePlotter().plot_ascii(root, max_depth=max_depth)
