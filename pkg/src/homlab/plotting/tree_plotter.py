"""Trace plotting and ASCII visualization."""

from typing import List, Optional

from homlab.search.trace import TraceNode


class TreePlotter:
    """Plots search and pin traces."""

    @staticmethod
    def format_decision(node: TraceNode) -> str:
        """Render a single decision.

        Examples:
            >>> TreePlotter.format_decision(TraceNode.root("r").record(3, 1, "fail"))
            '3=1 [fail]'
            >>> TreePlotter.format_decision(TraceNode.root("r").record(0, 2))
            '0=2'
        """
        return f"{node.label} [{node.outcome}]" if node.outcome else node.label

    def plot_ascii(self, root: TraceNode, max_depth: Optional[int] = None, outcome: Optional[str] = None) -> str:
        """Plot a trace in ASCII format.

        Args:
            root: Root node of the trace
            max_depth: Hide decisions deeper than this. Default: show all
            outcome: Only show decisions with this outcome (and their ancestors)

        Returns:
            ASCII tree representation as string
        """
        lines: List[str] = [root.label]

        def visible(node: TraceNode) -> bool:
            if outcome is None:
                return True
            return node.outcome == outcome or any(visible(child) for child in node.children)

        def walk(node: TraceNode, prefix: str, depth: int):
            if max_depth is not None and depth > max_depth:
                return
            children = [child for child in node.children if visible(child)]
            for index, child in enumerate(children):
                is_last = index == len(children) - 1
                branch = "└── " if is_last else "├── "
                lines.append(prefix + branch + TreePlotter.format_decision(child))
                extend = "    " if is_last else "│   "
                walk(child, prefix + extend, depth + 1)

        walk(root, "", 1)
        return "\n".join(lines)
