"""Unit tests for the text formats and loaders."""

import io

import pytest

from homlab.errors import FormatError
from homlab.io import (
    default_registry,
    format_formula,
    format_operation,
    format_relation,
    format_structure,
    format_system,
    load_formula,
    load_instance,
    load_operation,
    load_relation,
    load_structure,
    load_system,
    significant_lines,
)
from homlab.logic.formula import PPFormula
from homlab.logic.relation import Relation
from homlab.polymorphisms.conditions import majority
from homlab.polymorphisms.identities import check_identities
from homlab.polymorphisms.operation import boolean_minority, median
from homlab.structures.library import complete_graph, cycle, parity_template, pss_template, transitive_tournament


@pytest.fixture
def registry():
    return default_registry()


class TestSignificantLines:
    def test_comments_and_blank_lines_are_dropped(self):
        text = "# header\n\nstructure A   # trailing\n  domain 1\n"
        assert significant_lines(text) == [(3, "structure A"), (4, "domain 1")]


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------

class TestStructureFormat:
    def test_load_library_fixtures(self, resources_dir):
        assert load_structure(str(resources_dir / "k3.txt")) == complete_graph(3)
        assert load_structure(str(resources_dir / "c5.txt")) == cycle(5)
        assert load_structure(str(resources_dir / "t3.txt")) == transitive_tournament(3)
        assert load_structure(str(resources_dir / "parity.txt")) == parity_template()

    def test_name_comes_from_the_header(self, resources_dir):
        assert load_structure(str(resources_dir / "k2.txt")).name == "K2"

    def test_fix_and_allow_lines(self, resources_dir):
        structure, lists = load_instance(str(resources_dir / "path_instance.txt"))
        assert structure.size == 3
        assert lists == {0: frozenset({0, 1}), 2: frozenset({2})}

    def test_instance_without_lists(self, resources_dir):
        _, lists = load_instance(str(resources_dir / "k2.txt"))
        assert lists is None

    def test_written_structures_read_back(self, registry):
        for s in [complete_graph(2), pss_template(), parity_template()]:
            document = registry.read(format_structure(s))
            assert document.structure == s

    def test_written_lists_read_back(self, registry):
        text = format_structure(cycle(4), {0: [1], 2: [0, 1]})
        assert "fix 0 1" in text
        assert "allow 2 0,1" in text
        assert registry.read(text).lists == {0: frozenset({1}), 2: frozenset({0, 1})}

    @pytest.mark.parametrize("text,line,message", [
        ("structure A\ndomain 2\nrel E 2\n0 1\n1 5\nend\nendstructure", 5, "outside 0..1"),
        ("structure A\nrel E 2\nend\nendstructure", 2, "'rel' before 'domain'"),
        ("structure A\ndomain 2\ndomain 3\nendstructure", 3, "Domain declared twice"),
        ("structure A\ndomain 2\nrel E 2\n0 1 1\nend\nendstructure", 4, "needs 2 entries"),
        ("structure A\ndomain 2\nrel E 2\n0 1", 4, "not closed"),
        ("structure A\ndomain 2\nrel E 2\n0 1\nendstructure", 5, "needs 2 entries, got 1"),
        ("structure A\ndomain 2\nrel E 2\nend", 4, "Missing 'endstructure'"),
        ("structure A\ndomain x\nendstructure", 2, "Expected an integer"),
        ("structure A\ndomain 2\nfix 3 0\nendstructure", 3, "Variable 3 outside"),
        ("structure A\ndomain 2\nendstructure\nrel E 2", 4, "Content after 'endstructure'"),
        ("structure two words\ndomain 1\nendstructure", 1, "contains spaces"),
    ])
    def test_errors_name_the_line(self, registry, text, line, message):
        with pytest.raises(FormatError, match=message) as info:
            registry.read(text, "fixture.txt")
        assert info.value.line == line
        assert str(info.value).startswith(f"fixture.txt:{line}: ")

    def test_error_from_a_file(self, resources_dir):
        with pytest.raises(FormatError) as info:
            load_structure(str(resources_dir / "broken_structure.txt"))
        assert info.value.line == 5
        assert info.value.source.endswith("broken_structure.txt")


class TestNamedShortcuts:
    @pytest.mark.parametrize("label,expected", [("@K3", complete_graph(3)), ("@T3", transitive_tournament(3))])
    def test_shortcuts(self, label, expected):
        assert load_structure(label) == expected

    def test_unknown_shortcut(self):
        with pytest.raises(FormatError, match="Unknown structure shortcut"):
            load_structure("@nonsense")


class TestStdin:
    def test_dash_reads_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(format_structure(complete_graph(2))))
        assert load_structure("-") == complete_graph(2)

    def test_stdin_errors_name_stdin(self, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("nonsense 1\n"))
        with pytest.raises(FormatError, match="<stdin>:1: Unknown document type"):
            load_structure("-")


# ---------------------------------------------------------------------------
# Operations and relations
# ---------------------------------------------------------------------------

class TestOperationFormat:
    def test_load(self, resources_dir):
        assert load_operation(str(resources_dir / "minority.txt")).table == boolean_minority().table
        assert load_operation(str(resources_dir / "median3.txt")).table == median(3).table

    def test_written_operations_read_back(self, registry):
        f = median(3)
        parsed = registry.read(format_operation(f))
        assert parsed.table == f.table
        assert parsed.name == "median"

    def test_missing_row(self, registry):
        with pytest.raises(FormatError, match="Missing rows"):
            registry.read("op f 1 2\n0 1\nend")

    def test_duplicate_row(self, registry):
        with pytest.raises(FormatError, match="Duplicate row"):
            registry.read("op f 1 2\n0 1\n0 0\n1 1\nend")

    def test_content_after_end(self, registry):
        with pytest.raises(FormatError, match="Content after 'end'") as info:
            registry.read("op f 1 2\n0 1\n1 0\nend\n0 0")
        assert info.value.line == 5

    def test_wrong_type_for_loader(self, resources_dir):
        with pytest.raises(FormatError, match="Expected an operation, got StructureDocument"):
            load_operation(str(resources_dir / "k2.txt"))


class TestRelationFormat:
    def test_load(self, resources_dir):
        assert load_relation(str(resources_dir / "disequality5.txt")) == Relation.disequality(5)

    def test_written_relations_read_back(self, registry):
        r = Relation.diagonal(3, 3)
        assert registry.read(format_relation(r)) == r

    def test_missing_end(self, registry):
        with pytest.raises(FormatError, match="Missing 'end'"):
            registry.read("relation 1 2\n0\n1")


# ---------------------------------------------------------------------------
# Identity systems and formulas
# ---------------------------------------------------------------------------

class TestLogicFormats:
    def test_identity_system_over_several_lines(self, resources_dir):
        system = load_system(str(resources_dir / "majority_system.txt"))
        assert system.name == "majority"
        assert system.symbols == (("t", 3),)
        assert len(system.identities) == 3
        assert check_identities({"t": median(3)}, system)

    def test_written_systems_read_back(self, registry):
        system = majority()
        parsed = registry.read(format_system(system))
        assert parsed == system

    def test_undeclared_symbol(self, registry):
        with pytest.raises(FormatError, match="Undeclared function symbol"):
            registry.read("sym f 2 ; id g(x,y) = x")

    def test_unexpected_part(self, registry):
        with pytest.raises(FormatError, match="Unexpected part") as info:
            registry.read("sym f 2\nrule f(x,y) = x")
        assert info.value.line == 2

    def test_formula(self, resources_dir):
        phi = load_formula(str(resources_dir / "walk2.txt"))
        assert phi == PPFormula.parse("pp free x z ; exists y ; E(x,y) & E(y,z)")

    def test_written_formulas_read_back(self, registry):
        phi = PPFormula.parse("pp free x ; exists y ; E(x,y) & y = x")
        assert registry.read(format_formula(phi)) == phi

    def test_malformed_formula(self, registry):
        with pytest.raises(FormatError, match="undeclared variables"):
            registry.read("pp free x ; E(x,y)")


class TestRegistry:
    def test_empty_document(self, registry):
        with pytest.raises(FormatError, match="Empty document"):
            registry.read("# only a comment\n")

    def test_unknown_document_type(self, registry):
        with pytest.raises(FormatError, match="expected one of"):
            registry.read("graph G\n")
