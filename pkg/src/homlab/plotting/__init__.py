"""Trace plotting and visualization utilities."""

from homlab.plotting.tree_plotter import TreePlotter

__all__ = [
    "TreePlotter",
]
