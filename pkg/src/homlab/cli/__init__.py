"""CLI argument configuration and entry point for homlab."""

from homlab.cli.args import (
    add_template_args,
    add_instance_args,
    add_guard_args,
    add_output_args,
    add_trace_args,
    guards_from_args,
)
from homlab.cli.app import build_parser, main, run

__all__ = [
    "add_template_args",
    "add_instance_args",
    "add_guard_args",
    "add_output_args",
    "add_trace_args",
    "guards_from_args",
    "build_parser",
    "main",
    "run",
]
