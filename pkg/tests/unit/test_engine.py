"""Unit tests for the solving dispatch."""

import pytest

from homlab.engine import METHODS, SolveOutcome, render_trace, solve_instance, solve_many
from homlab.errors import SignatureMismatchError
from homlab.io import load_instance
from homlab.polymorphisms.operation import boolean_minority
from homlab.search.trace import TraceNode
from homlab.structures.library import (
    complete_graph,
    cycle,
    directed_cycle,
    parity_template,
    transitive_tournament,
)
from homlab.structures.structure import Structure, is_homomorphism


class TestSolveOutcome:
    @pytest.mark.parametrize("method,accepted,result", [
        ("search", True, "homomorphism"),
        ("maltsev", False, "no homomorphism"),
        ("ac", True, "accepted"),
        ("sac", False, "rejected"),
    ])
    def test_result(self, method, accepted, result):
        outcome = SolveOutcome("I", method, accepted)
        assert outcome.result == result
        assert outcome.verdict_only == (method in ("ac", "pc", "sac"))


class TestSolveInstance:
    def test_search_finds_a_homomorphism(self):
        outcome = solve_instance(cycle(5), complete_graph(3))
        assert outcome.accepted
        assert outcome.label == "C5"
        assert is_homomorphism(outcome.homomorphism, cycle(5), complete_graph(3))

    def test_search_without_a_homomorphism(self):
        outcome = solve_instance(complete_graph(3), complete_graph(2), label="triangle")
        assert outcome.result == "no homomorphism"
        assert outcome.label == "triangle"

    def test_arc_consistency_only_gives_a_verdict(self):
        # AC does not see odd cycles
        outcome = solve_instance(complete_graph(3), complete_graph(2), method="ac")
        assert outcome.result == "accepted"
        assert outcome.homomorphism is None

    def test_path_consistency_rejects_the_triangle(self):
        assert not solve_instance(complete_graph(3), complete_graph(2), method="pc").accepted

    def test_arc_consistency_rejects_a_cycle_into_a_tournament(self):
        assert not solve_instance(directed_cycle(3), transitive_tournament(3), method="ac").accepted

    def test_singleton_arc_consistency(self):
        assert solve_instance(cycle(6), complete_graph(2), method="sac").accepted

    def test_lists_restrict_the_search(self, resources_dir):
        instance, lists = load_instance(str(resources_dir / "path_instance.txt"))
        outcome = solve_instance(instance, transitive_tournament(3), lists=lists)
        assert outcome.homomorphism.table == (0, 1, 2)
        blocked = {**lists, 1: frozenset({0})}
        assert not solve_instance(instance, transitive_tournament(3), lists=blocked).accepted

    def test_maltsev(self):
        instance = Structure(parity_template().signature, 3, {"L1": [(0, 1, 2)], "L0": [(0, 1, 2)]})
        outcome = solve_instance(instance, parity_template(), method="maltsev", maltsev=boolean_minority())
        assert outcome.result == "no homomorphism"

    def test_maltsev_needs_an_operation(self):
        with pytest.raises(ValueError, match="needs an operation"):
            solve_instance(complete_graph(2), complete_graph(2), method="maltsev")

    def test_maltsev_takes_no_lists(self):
        with pytest.raises(ValueError, match="fix/allow lists"):
            solve_instance(
                complete_graph(2), complete_graph(2), method="maltsev", maltsev=boolean_minority(),
                lists={0: frozenset({0})},
            )

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="Unknown method 'magic'"):
            solve_instance(complete_graph(2), complete_graph(2), method="magic")

    def test_signatures_must_agree(self):
        with pytest.raises(SignatureMismatchError):
            solve_instance(complete_graph(2), parity_template())

    def test_every_method_is_dispatched(self):
        for method in METHODS:
            extra = {"maltsev": boolean_minority()} if method == "maltsev" else {}
            assert solve_instance(cycle(4), complete_graph(2), method=method, **extra).accepted

    def test_trace(self):
        root = TraceNode.root("solve")
        solve_instance(cycle(5), complete_graph(3), trace=root)
        assert root.count("solution") == 1
        assert render_trace(root).splitlines()[0] == "solve"
        assert render_trace(root, max_depth=1).count("\n") < render_trace(root).count("\n")


class TestSolveMany:
    def _items(self):
        return [("odd", cycle(5), None), ("even", cycle(6), None), ("edge", complete_graph(2), None)]

    def test_results_keep_input_order(self):
        outcomes = solve_many(self._items(), complete_graph(2))
        assert [(o.label, o.accepted) for o in outcomes] == [("odd", False), ("even", True), ("edge", True)]

    def test_process_pool_gives_the_same_results(self):
        serial = solve_many(self._items(), complete_graph(2), method="pc")
        parallel = solve_many(self._items(), complete_graph(2), method="pc", jobs=2)
        assert [o.accepted for o in parallel] == [o.accepted for o in serial]

    def test_jobs_must_be_positive(self):
        with pytest.raises(ValueError, match="jobs must be positive"):
            solve_many(self._items(), complete_graph(2), jobs=0)
