"""Integration tests: run the homlab command line on library structures and resource files."""

import importlib.util
import io
import sys
from pathlib import Path
from unittest.mock import patch

import pytest

from homlab.cli.app import EXIT_GUARD, EXIT_NEGATIVE, EXIT_POSITIVE, EXIT_USAGE, build_parser, run
from homlab.cli.args import guards_from_args
from homlab.config import ENV_VARIABLES, Guards

RESOURCES = Path(__file__).parent.parent / "resources"

# scripts/ is not a package, so load homlab.py directly by file path
_script_spec = importlib.util.spec_from_file_location(
    "homlab_script",
    Path(__file__).parent.parent.parent / "scripts" / "homlab.py",
)
_script_module = importlib.util.module_from_spec(_script_spec)
_script_spec.loader.exec_module(_script_module)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for variable in ENV_VARIABLES.values():
        monkeypatch.delenv(variable, raising=False)
    return monkeypatch


def resource(name: str) -> str:
    return str(RESOURCES / name)


def homlab(*argv: str):
    """Run one command; returns (exit code, report fields, full report)."""
    stream = io.StringIO()
    code = run(list(argv), stdout=stream)
    text = stream.getvalue()
    fields = {}
    for line in text.splitlines():
        if ": " in line and not line.startswith(("#", "|", "+")):
            key, value = line.split(": ", 1)
            fields.setdefault(key, value)
    return code, fields, text


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------

class TestSolve:
    def test_homomorphism(self):
        code, fields, text = homlab("solve", "--template", "@K3", "--instance", resource("c5.txt"))
        assert code == EXIT_POSITIVE
        assert fields["instance"] == "C5"
        assert fields["result"] == "homomorphism"
        assert "[homomorphism C5]" in text

    def test_no_homomorphism(self):
        code, fields, _ = homlab("solve", "--template", "@K2", "--instance", resource("k3.txt"))
        assert code == EXIT_NEGATIVE
        assert fields["result"] == "no homomorphism"

    def test_any_rejected_instance_is_negative(self):
        code, _, text = homlab(
            "solve", "--template", "@K2", "--instance", resource("k2.txt"), resource("c5.txt"),
        )
        assert code == EXIT_NEGATIVE
        assert text.count("result: ") == 2

    def test_lists(self):
        code, _, text = homlab("solve", "--template", resource("t3.txt"), "--instance", resource("path_instance.txt"))
        assert code == EXIT_POSITIVE
        assert "[homomorphism P]" in text

    @pytest.mark.parametrize("flag,expected", [("--ac", "accepted"), ("--pc", "rejected"), ("--sac", "rejected")])
    def test_consistency_verdicts(self, flag, expected):
        _, fields, _ = homlab("solve", flag, "--template", "@K2", "--instance", resource("k3.txt"))
        assert fields["result"] == expected

    def test_maltsev(self):
        code, fields, _ = homlab(
            "solve", "--template", resource("parity.txt"), "--instance", resource("parity_contradiction.txt"),
            "--maltsev", resource("minority.txt"),
        )
        assert code == EXIT_NEGATIVE
        assert fields["result"] == "no homomorphism"

    def test_trace(self):
        code, _, text = homlab("solve", "--template", "@K3", "--instance", "@C5", "--trace")
        assert code == EXIT_POSITIVE
        assert "[trace]\nsearch(C5)" in text
        assert "[solution]" in text

    def test_trace_needs_one_instance(self):
        code, _, _ = homlab("solve", "--template", "@K3", "--instance", "@C5", "@C7", "--trace")
        assert code == EXIT_USAGE

    def test_methods_are_exclusive(self):
        assert homlab("solve", "--ac", "--pc", "--template", "@K2", "--instance", "@K2")[0] == EXIT_USAGE


# ---------------------------------------------------------------------------
# core, powerset, tree duality, orbits
# ---------------------------------------------------------------------------

class TestStructureCommands:
    def test_core(self):
        code, fields, text = homlab("core", "--template", "@C6")
        assert code == EXIT_POSITIVE
        assert fields["is core"] == "no"
        assert fields["core size"] == "2"
        assert "[retraction]" in text

    def test_powerset(self):
        _, fields, text = homlab("powerset", "--template", "@K2")
        assert fields["elements"] == "3"
        assert "structure P(K2)" in text

    @pytest.mark.parametrize("template,code", [("@T3", EXIT_POSITIVE), ("@K2", EXIT_NEGATIVE)])
    def test_tree_duality(self, template, code):
        assert homlab("tree-duality", "--template", template)[0] == code

    def test_tree_duality_trace(self):
        code, fields, text = homlab("tree-duality", "--template", "@T3", "--trace")
        assert code == EXIT_POSITIVE
        assert fields["tree duality"] == "yes"
        assert "[trace]" in text

    def test_tree_duality_guard(self):
        code, fields, _ = homlab("tree-duality", "--template", "@T3", "--cap-powerset", "2")
        assert code == EXIT_GUARD
        assert fields["tree duality"] == "inconclusive"

    def test_orbits(self):
        code, fields, _ = homlab("orbits", "--template", resource("c5.txt"), "--k", "2")
        assert code == EXIT_POSITIVE
        assert fields["orbits"] == "3"


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------

class TestPoly:
    def test_find_kind(self):
        code, fields, text = homlab("poly", "find", "--template", "@T3", "--kind", "majority")
        assert code == EXIT_POSITIVE
        assert fields["result"] == "found"
        assert "[operation" in text

    def test_find_absent(self):
        code, fields, _ = homlab("poly", "find", "--template", "@K3", "--kind", "maltsev")
        assert code == EXIT_NEGATIVE
        assert fields["result"] == "absent"

    def test_find_system_file(self):
        code, fields, _ = homlab("poly", "find", "--template", "@K2", "--system", resource("majority_system.txt"))
        assert code == EXIT_POSITIVE
        assert fields["system"] == "majority"

    def test_find_needs_a_condition(self):
        assert homlab("poly", "find", "--template", "@K2")[0] == EXIT_USAGE

    def test_unknown_kind(self):
        assert homlab("poly", "find", "--template", "@K2", "--kind", "magic")[0] == EXIT_USAGE

    def test_operation_test(self):
        code, fields, _ = homlab(
            "poly", "test", "--template", "@K2", "--op", resource("minority.txt"), "--kind", "maltsev",
        )
        assert code == EXIT_POSITIVE
        assert fields["polymorphism"] == "yes"
        assert fields["maltsev"] == "yes"

    def test_operation_on_the_wrong_domain(self):
        assert homlab("poly", "test", "--template", "@K2", "--op", resource("median3.txt"))[0] == EXIT_USAGE

    @pytest.mark.parametrize("template,code", [("@T3", EXIT_POSITIVE), ("@K3", EXIT_NEGATIVE)])
    def test_majority_test(self, template, code):
        assert homlab("poly", "majority-test", "--template", template)[0] == code


# ---------------------------------------------------------------------------
# pp
# ---------------------------------------------------------------------------

class TestPP:
    def test_define(self):
        code, fields, _ = homlab(
            "pp", "define", "--template", resource("c5.txt"), "--relation", resource("disequality5.txt"),
        )
        assert code == EXIT_POSITIVE
        assert fields["definable"] == "yes"
        assert fields["formula"].startswith("pp free")

    def test_define_checks_the_domain(self):
        assert homlab("pp", "define", "--template", "@K3", "--relation", resource("disequality5.txt"))[0] == EXIT_USAGE

    def test_encode_binary(self):
        code, fields, _ = homlab("pp", "encode-binary", "--template", "@pss", "--d", "3")
        assert code == EXIT_POSITIVE
        assert fields["elements"] == "27"
        assert fields["symbols"] == "11"


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

class TestClassify:
    @pytest.mark.parametrize("argv,code,verdict", [
        (("dichotomy", "--template", "@DC3"), EXIT_POSITIVE, "P"),
        (("dichotomy", "--template", resource("k3.txt")), EXIT_NEGATIVE, "NP-complete"),
        (("schaefer", "--template", resource("parity.txt")), EXIT_POSITIVE, "P"),
        (("graph", "--template", "@C5"), EXIT_NEGATIVE, "NP-complete"),
        (("graph", "--template", "@C6"), EXIT_POSITIVE, "P"),
        (("smooth", "--template", "@DC4"), EXIT_POSITIVE, "P"),
    ])
    def test_verdicts(self, argv, code, verdict):
        exit_code, fields, _ = homlab("classify", *argv)
        assert exit_code == code
        assert fields["verdict"] == verdict

    def test_schaefer_classes(self):
        assert homlab("classify", "schaefer", "--template", resource("parity.txt"))[1]["classes"] == "affine"

    def test_guard_flag(self):
        code, fields, _ = homlab("classify", "dichotomy", "--template", "@K3", "--cap-arity", "3")
        assert code == EXIT_GUARD
        assert fields["verdict"] == "inconclusive"

    def test_guard_environment_variable(self, clean_env):
        clean_env.setenv("HOMLAB_CAP_ARITY", "3")
        assert homlab("classify", "dichotomy", "--template", "@K3")[0] == EXIT_GUARD

    def test_width(self):
        assert homlab("classify", "width", "--template", "@K3")[0] == EXIT_NEGATIVE

    def test_cyclic(self):
        code, fields, _ = homlab("classify", "cyclic", "--template", "@T3", "--max-arity", "3")
        assert code == EXIT_POSITIVE
        assert fields["arities"] == "2 3"

    def test_markdown(self):
        _, _, text = homlab("classify", "dichotomy", "--template", "@DC3", "--format", "markdown")
        assert text.startswith("# classify dichotomy\n")
        assert "- **verdict**: P" in text


# ---------------------------------------------------------------------------
# Errors and entry points
# ---------------------------------------------------------------------------

class TestErrors:
    def test_no_command(self):
        assert run([], stdout=io.StringIO()) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert homlab("core", "--template", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE

    def test_format_error_names_the_line(self, caplog):
        code, _, _ = homlab("core", "--template", resource("broken_structure.txt"))
        assert code == EXIT_USAGE
        assert "broken_structure.txt:5:" in caplog.text

    def test_unknown_shortcut(self):
        assert homlab("core", "--template", "@nonsense")[0] == EXIT_USAGE

    def test_help_exits_cleanly(self):
        assert run(["--help"], stdout=io.StringIO()) == EXIT_POSITIVE


class TestGuardArgs:
    def test_flags_override_the_base(self):
        args = build_parser().parse_args(["core", "--template", "@K2", "--cap-domain", "5"])
        guards = guards_from_args(args, Guards(max_domain=9, max_arity=4))
        assert guards.max_domain == 5
        assert guards.max_arity == 4


class TestScript:
    def test_script_main_exits_with_the_verdict(self, capsys):
        argv = ["homlab.py", "classify", "graph", "--template", "@C6"]
        with patch.object(sys, "argv", argv), pytest.raises(SystemExit) as info:
            _script_module.main()
        assert info.value.code == EXIT_POSITIVE
        assert "verdict: P" in capsys.readouterr().out
