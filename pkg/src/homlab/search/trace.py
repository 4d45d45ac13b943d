"""Search traces as anytree node trees."""

from typing import List, Optional

from anytree import NodeMixin, PreOrderIter


class TraceNode(NodeMixin):
    """One decision of a search or pin loop.

    The root carries only a label. Every other node records the variable that was
    pinned, the value tried, and the outcome of propagation ('ok', 'fail',
    'solution' or 'kept').

    Responsibilities:
    - Record decisions in the order they were made
    - Provide traversal through anytree (children, parent, PreOrderIter)

    Not responsible for:
    - Rendering (use homlab.plotting.TreePlotter)
    """

    def __init__(
        self,
        label: str,
        *,
        variable: Optional[int] = None,
        value: Optional[int] = None,
        outcome: str = "",
        parent: Optional["TraceNode"] = None,
    ) -> None:
        self.label = label
        self.variable = variable
        self.value = value
        self.outcome = outcome
        self.parent = parent

    @classmethod
    def root(cls, label: str) -> "TraceNode":
        return cls(label)

    def record(self, variable: int, value: int, outcome: str = "") -> "TraceNode":
        """Attach a decision below this node and return it."""
        return TraceNode(f"{variable}={value}", variable=variable, value=value, outcome=outcome, parent=self)

    def decisions(self) -> List["TraceNode"]:
        """All recorded decisions in pre-order (the root excluded)."""
        return [node for node in PreOrderIter(self) if node is not self]

    def count(self, outcome: str) -> int:
        return sum(1 for node in self.decisions() if node.outcome == outcome)

    def __repr__(self) -> str:
        suffix = f" [{self.outcome}]" if self.outcome else ""
        return f"TraceNode({self.label}{suffix})"
