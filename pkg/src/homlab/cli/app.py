"""The homlab command line.

Exit codes: 0 positive verdict (homomorphism found, property holds, class P),
1 negative verdict, 2 usage or format error, 3 a guard stopped the computation.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO

from homlab.classify.cyclic import cyclic_arity_profile
from homlab.classify.dichotomy import dichotomy
from homlab.classify.graphs import hell_nesetril, smooth_digraph
from homlab.classify.schaefer import schaefer
from homlab.classify.verdict import Complexity, PropertyVerdict, Verdict
from homlab.classify.width import bounded_width, tree_duality
from homlab.cli.args import (
    add_guard_args,
    add_instance_args,
    add_output_args,
    add_template_args,
    add_trace_args,
    guards_from_args,
)
from homlab.config import Guards
from homlab.engine import render_trace, solve_instance, solve_many
from homlab.errors import FormatError, GuardExceededError
from homlab.io import (
    format_formula,
    format_structure,
    load_instance,
    load_operation,
    load_relation,
    load_structure,
    load_system,
)
from homlab.logic.definability import is_pp_definable
from homlab.logic.encoding import binary_encoding
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.majority_test import majority_test_pc
from homlab.polymorphisms.operation import is_polymorphism
from homlab.polymorphisms.search import Outcome, find_polymorphism, find_special, satisfies
from homlab.powerset.solvability import ac_solvability
from homlab.powerset.structure import powerset_structure
from homlab.reports import (
    BaseReportFormatter,
    create_formatter,
    mapping_table,
    operation_table,
    orbits_table,
    profile_table,
    write_core,
    write_operations,
    write_property,
    write_verdict,
)
from homlab.search.trace import TraceNode
from homlab.structures.cores import core
from homlab.structures.symmetry import orbits

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

Handler = Callable[[argparse.Namespace, BaseReportFormatter, Guards], int]


def _exit_for(holds: Optional[bool]) -> int:
    if holds is None:
        return EXIT_GUARD
    return EXIT_POSITIVE if holds else EXIT_NEGATIVE


def _verdict_exit(verdict: Verdict) -> int:
    if verdict.complexity is Complexity.INCONCLUSIVE:
        return EXIT_GUARD
    return EXIT_POSITIVE if verdict.complexity is Complexity.P else EXIT_NEGATIVE


def cmd_solve(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    maltsev = load_operation(args.maltsev) if args.maltsev else None
    method = "maltsev" if maltsev is not None else args.method
    items = []
    for path in args.instance:
        instance, lists = load_instance(path)
        items.append((instance.name or path, instance, lists))
    trace = None
    if args.trace:
        if len(items) != 1 or method != "search":
            raise ValueError("--trace needs a single instance and the backtracking search")
        label, instance, lists = items[0]
        trace = TraceNode.root(f"search({label})")
        outcomes = [solve_instance(instance, template, lists=lists, trace=trace, label=label)]
    else:
        outcomes = solve_many(items, template, method=method, maltsev=maltsev, jobs=args.jobs)
    out.write_title(f"solve ({method})")
    out.write_field("template", template.name or args.template)
    for outcome in outcomes:
        out.write_field("instance", outcome.label)
        out.write_field("result", outcome.result)
        if outcome.homomorphism is not None:
            out.write_table(f"homomorphism {outcome.label}", mapping_table(outcome.homomorphism))
    if trace is not None:
        out.write_section("trace", render_trace(trace, args.trace_depth))
    return _exit_for(all(o.accepted for o in outcomes))


def cmd_core(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    c = core(template, guards)
    out.write_title("core")
    out.write_field("template", template.name or args.template)
    out.write_field("is core", "yes" if c.structure.size == template.size else "no")
    write_core(out, c)
    out.write_table("retraction", mapping_table(c.retraction))
    out.write_section("core structure", format_structure(c.structure))
    return EXIT_POSITIVE


def cmd_powerset(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    p = powerset_structure(template, guards)
    out.write_title("powerset")
    out.write_field("elements", p.size)
    out.write_field("tuples", p.tuple_count)
    out.write_section("structure", format_structure(p))
    return EXIT_POSITIVE


def cmd_tree_duality(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    out.write_title("tree duality")
    if args.trace:
        result = ac_solvability(template, guards)
        verdict = PropertyVerdict(
            result.solvable,
            "P(C) maps to the core C" if result.solvable else "P(C) does not map to the core C",
            core=result.core,
            stage="powerset",
        )
        write_property(out, "tree duality", verdict)
        out.write_section("trace", render_trace(result.trace, args.trace_depth))
        return _exit_for(verdict.holds)
    verdict = tree_duality(template, guards)
    write_property(out, "tree duality", verdict)
    return _exit_for(verdict.holds)


def cmd_poly_find(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    out.write_title("polymorphism search")
    if args.system:
        system = load_system(args.system)
        out.write_field("system", system.name or str(system))
        operations = find_polymorphism(template, system, args.idempotent, guards=guards)
        out.write_field("result", "found" if operations else "absent")
        if operations:
            write_operations(out, operations)
        return _exit_for(operations is not None)
    if not args.kind:
        raise ValueError("poly find needs --system or --kind")
    result = find_special(template, PolymorphismKind.parse(args.kind), args.arity, args.idempotent, guards=guards)
    out.write_field("kind", result.system.name or args.kind)
    out.write_field("result", result.outcome.value)
    if result.reason:
        out.write_field("reason", result.reason)
    write_operations(out, result.operations)
    return {Outcome.FOUND: EXIT_POSITIVE, Outcome.ABSENT: EXIT_NEGATIVE}.get(result.outcome, EXIT_GUARD)


def cmd_poly_test(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    f = load_operation(args.op)
    if f.domain_size != template.size:
        raise ValueError(f"{f.label} acts on {f.domain_size} elements, the template has {template.size}")
    holds = is_polymorphism(f, template)
    out.write_title("polymorphism test")
    out.write_field("operation", f.label)
    out.write_field("polymorphism", "yes" if holds else "no")
    if args.kind:
        kind_holds = satisfies(f, PolymorphismKind.parse(args.kind), args.arity)
        out.write_field(args.kind, "yes" if kind_holds else "no")
        holds = holds and kind_holds
    out.write_table("operation", operation_table(f))
    return _exit_for(holds)


def cmd_poly_majority(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    trace = TraceNode.root("majority-test") if args.trace else None
    result = majority_test_pc(template, guards=guards, trace=trace)
    out.write_title("majority test")
    out.write_field("majority polymorphism", "yes" if result.holds else "no")
    if result.operation is not None:
        out.write_table("majority", operation_table(result.operation))
    if trace is not None:
        out.write_section("trace", render_trace(trace, args.trace_depth))
    return _exit_for(result.holds)


def cmd_pp_define(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    relation = load_relation(args.relation)
    result = is_pp_definable(relation, template, guards=guards)
    out.write_title("pp definability")
    out.write_field("definable", "yes" if result.definable else "no")
    if result.witness is not None:
        out.write_field("formula", format_formula(result.witness))
    if result.counterexample is not None:
        out.write_field("violating polymorphism", result.counterexample.label)
        out.write_table("counterexample", operation_table(result.counterexample))
    return _exit_for(result.definable)


def cmd_pp_encode(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    encoding = binary_encoding(template, args.d, guards)
    out.write_title(f"binary encoding [{args.d}]")
    out.write_field("elements", encoding.structure.size)
    out.write_field("symbols", len(encoding.structure.signature))
    if args.instance:
        instance, _ = load_instance(args.instance)
        out.write_section("instance", format_structure(encoding.translate(instance)))
    else:
        out.write_section("structure", format_structure(encoding.structure))
    return EXIT_POSITIVE


def cmd_classify(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    out.write_title(f"classify {args.classifier}")
    out.write_field("template", template.name or args.template)
    if args.classifier == "width":
        verdict = bounded_width(template, guards)
        write_property(out, "bounded width", verdict)
        return _exit_for(verdict.holds)
    if args.classifier == "cyclic":
        profile = cyclic_arity_profile(template, args.max_arity, guards)
        out.write_field("arities", " ".join(map(str, sorted(profile.arities))) or "none")
        out.write_table("cyclic polymorphisms", profile_table(profile))
        return _exit_for(bool(profile.arities) if profile.complete or profile.arities else None)
    classifiers: Dict[str, Callable[[], Verdict]] = {
        "schaefer": lambda: schaefer(template),
        "graph": lambda: hell_nesetril(template),
        "smooth": lambda: smooth_digraph(template, guards),
        "dichotomy": lambda: dichotomy(template, guards),
    }
    verdict = classifiers[args.classifier]()
    write_verdict(out, verdict)
    return _verdict_exit(verdict)


def cmd_orbits(args: argparse.Namespace, out: BaseReportFormatter, guards: Guards) -> int:
    template = load_structure(args.template)
    result = orbits(template, args.k, guards)
    out.write_title(f"orbits of {args.k}-tuples")
    out.write_field("orbits", len(result))
    out.write_table("orbits", orbits_table(result))
    return EXIT_POSITIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homlab",
        description="Finite-domain CSP and graph homomorphism toolkit."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Handler, help: str, parent=commands) -> argparse.ArgumentParser:
        sub = parent.add_parser(name, help=help, description=help)
        add_output_args(sub)
        add_guard_args(sub)
        sub.set_defaults(handler=handler)
        return sub

    solve = command("solve", cmd_solve, "Decide whether instances map to a template")
    add_template_args(solve)
    add_instance_args(solve, multiple=True)
    methods = solve.add_mutually_exclusive_group()
    methods.add_argument("--maltsev", type=str, default=None, help="Operation file of a Maltsev polymorphism")
    methods.add_argument("--ac", action="store_const", const="ac", dest="method", help="Arc consistency verdict")
    methods.add_argument("--pc", action="store_const", const="pc", dest="method", help="Path consistency verdict")
    methods.add_argument("--sac", action="store_const", const="sac", dest="method", help="Singleton arc consistency")
    solve.set_defaults(method="search")
    solve.add_argument("--jobs", type=int, default=1, help="Worker processes for several instances (default: 1)")
    add_trace_args(solve)

    sub = command("core", cmd_core, "Compute the core and the retraction onto it")
    add_template_args(sub)

    sub = command("powerset", cmd_powerset, "Build the powerset structure P(B)")
    add_template_args(sub)

    sub = command("tree-duality", cmd_tree_duality, "Decide whether arc consistency solves CSP(B)")
    add_template_args(sub)
    add_trace_args(sub)

    poly = commands.add_parser("poly", help="Polymorphism search and tests")
    poly_commands = poly.add_subparsers(dest="poly_command", required=True)
    sub = command("find", cmd_poly_find, "Search for polymorphisms satisfying identities", poly_commands)
    add_template_args(sub)
    sub.add_argument("--system", type=str, default=None, help="Identity system file")
    sub.add_argument("--kind", type=str, default=None, help=f"Named condition: {[k.value for k in PolymorphismKind]}")
    sub.add_argument("--arity", type=int, default=None, help="Arity for parametrised conditions")
    sub.add_argument("--idempotent", action="store_true", help="Require idempotent operations")
    sub = command("test", cmd_poly_test, "Check that an operation is a polymorphism", poly_commands)
    add_template_args(sub)
    sub.add_argument("--op", type=str, required=True, help="Operation file")
    sub.add_argument("--kind", type=str, default=None, help="Also check a named condition")
    sub.add_argument("--arity", type=int, default=None, help="Arity for parametrised conditions")
    sub = command("majority-test", cmd_poly_majority, "Decide majority via path consistency", poly_commands)
    add_template_args(sub)
    add_trace_args(sub)

    pp = commands.add_parser("pp", help="Primitive positive definability and encodings")
    pp_commands = pp.add_subparsers(dest="pp_command", required=True)
    sub = command("define", cmd_pp_define, "Decide pp-definability of a relation", pp_commands)
    add_template_args(sub)
    sub.add_argument("--relation", type=str, required=True, help="Relation file")
    sub = command("encode-binary", cmd_pp_encode, "Build the binary encoding C^[d]", pp_commands)
    add_template_args(sub)
    sub.add_argument("--d", type=int, required=True, help="Tuple length, at least the maximal arity")
    sub.add_argument("--instance", type=str, default=None, help="Translate this instance instead")

    sub = command("classify", cmd_classify, "Classify the complexity of CSP(B)")
    sub.add_argument("classifier", choices=["schaefer", "graph", "smooth", "dichotomy", "width", "cyclic"])
    add_template_args(sub)
    sub.add_argument("--max-arity", type=int, default=5, dest="max_arity", help="Largest cyclic arity (default: 5)")

    sub = command("orbits", cmd_orbits, "Orbits of k-tuples under the automorphism group")
    add_template_args(sub)
    sub.add_argument("--k", type=int, required=True, help="Tuple length")
    return parser


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s")
    logging.getLogger().setLevel(level)


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Run one command and return its exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        stdout: Where the report goes (default: sys.stdout)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_POSITIVE
    configure_logging(args)
    stream = stdout if stdout is not None else sys.stdout
    try:
        guards = guards_from_args(args)
        with create_formatter(args.format, stream) as out:
            return args.handler(args, out, guards)
    except GuardExceededError as e:
        logger.error("Inconclusive: %s", e)
        return EXIT_GUARD
    except (FormatError, ValueError, OSError) as e:
        logger.error("Error: %s", e)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
