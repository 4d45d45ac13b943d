"""Common argument definitions for the homlab command line.

This module provides reusable argument groups that are shared across
subcommands. Subcommand-specific arguments stay in homlab.cli.app.
"""

import argparse
from typing import Dict, Optional

from homlab.config import Guards
from homlab.reports import FORMATS

# flag destination -> Guards field
GUARD_FLAGS: Dict[str, str] = {
    "cap_domain": "max_domain",
    "cap_powerset": "max_powerset_domain",
    "cap_arity": "max_arity",
    "cap_states": "max_states",
    "cap_solutions": "max_solutions",
    "cap_pp_states": "max_pp_states",
}


def add_template_args(parser: argparse.ArgumentParser) -> None:
    """Add the template argument to parser.

    Args:
        parser: ArgumentParser to add arguments to
    """
    parser.add_argument(
        "--template",
        type=str,
        required=True,
        help="Template structure file, '-' for stdin, or a library shortcut such as '@K3', '@DC5', '@pss'"
    )


def add_instance_args(parser: argparse.ArgumentParser, multiple: bool = False) -> None:
    """Add the instance argument to parser.

    Args:
        parser: ArgumentParser to add arguments to
        multiple: Whether several instance files may be given
    """
    parser.add_argument(
        "--instance",
        type=str,
        required=True,
        nargs="+" if multiple else None,
        help="Instance structure file(s); 'fix <var> <value>' and 'allow <var> <v1,v2>' lines "
             "restrict the candidates"
    )


def add_guard_args(parser: argparse.ArgumentParser) -> None:
    """Add the cap flags; they override HOMLAB_CAP_* environment variables.

    Args:
        parser: ArgumentParser to add arguments to
    """
    group = parser.add_argument_group("caps")
    group.add_argument("--cap-domain", type=int, dest="cap_domain", help="Largest structure for core and symmetry")
    group.add_argument("--cap-powerset", type=int, dest="cap_powerset", help="Largest domain of a powerset structure")
    group.add_argument("--cap-arity", type=int, dest="cap_arity", help="Largest arity of an indicator power")
    group.add_argument("--cap-states", type=int, dest="cap_states", help="Largest search space or materialisation")
    group.add_argument("--cap-solutions", type=int, dest="cap_solutions", help="Largest number of enumerated solutions")
    group.add_argument("--cap-pp-states", type=int, dest="cap_pp_states", help="Largest power built for pp-definitions")


def add_output_args(parser: argparse.ArgumentParser) -> None:
    """Add report format and verbosity arguments to parser.

    Args:
        parser: ArgumentParser to add arguments to
    """
    parser.add_argument(
        "--format",
        type=str,
        choices=list(FORMATS),
        default="text",
        help="Report format: 'text' (default, 'key: value' lines) or 'markdown'"
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Log progress and propagation details")
    verbosity.add_argument("--quiet", action="store_true", help="Only log warnings and errors")


def add_trace_args(parser: argparse.ArgumentParser) -> None:
    """Add trace printing arguments to parser.

    Args:
        parser: ArgumentParser to add arguments to
    """
    parser.add_argument(
        "--trace",
        action="store_true",
        help="Print the decision trace as an ASCII tree"
    )
    parser.add_argument(
        "--trace-depth",
        type=int,
        default=None,
        dest="trace_depth",
        help="Hide trace decisions deeper than this (default: show all)"
    )


def guards_from_args(args: argparse.Namespace, base: Optional[Guards] = None) -> Guards:
    """Environment (or the given base) guards, overridden by the cap flags that were set."""
    guards = base if base is not None else Guards.from_env()
    overrides = {field: getattr(args, flag, None) for flag, field in GUARD_FLAGS.items()}
    return guards.merged(**overrides)
