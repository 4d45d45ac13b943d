"""Unit tests for homomorphism search, oracles and solution construction."""

import pytest

from homlab.config import Guards
from homlab.errors import GuardExceededError, OracleInconsistencyError
from homlab.search import (
    ArcConsistencyOracle,
    BruteForceOracle,
    CountingOracle,
    KConsistencyOracle,
    OracleFactory,
    PathConsistencyOracle,
    SearchOracle,
    TraceNode,
    brute_force_hom,
    construct_solution,
    homomorphically_equivalent,
    iter_homomorphisms,
    search_hom,
)
from homlab.structures.library import (
    complete_graph,
    cycle,
    directed_cycle,
    pss_template,
    transitive_tournament,
)
from homlab.structures.structure import Mapping, is_homomorphism


class TestBruteForce:
    def test_pentagon_is_three_colourable(self):
        h = brute_force_hom(cycle(5), complete_graph(3))
        assert h is not None
        assert is_homomorphism(h, cycle(5), complete_graph(3))

    def test_triangle_is_not_two_colourable(self):
        assert brute_force_hom(complete_graph(3), complete_graph(2)) is None

    def test_identity_is_found_first_on_rigid_structure(self):
        t = transitive_tournament(3)
        assert brute_force_hom(t, t) == Mapping.identity(3)

    def test_guard_is_enforced(self):
        with pytest.raises(GuardExceededError):
            brute_force_hom(cycle(7), complete_graph(3), guards=Guards(max_states=100))


class TestBacktracking:
    def test_agrees_with_brute_force(self, random_digraph, rng):
        for _ in range(200):
            g = random_digraph(rng.randint(2, 7), 0.3)
            h = random_digraph(rng.randint(2, 3), 0.5, loops=rng.random() < 0.2)
            found = search_hom(g, h)
            assert (found is not None) == (brute_force_hom(g, h) is not None)
            if found is not None:
                assert is_homomorphism(found, g, h)

    def test_precolouring(self):
        h = search_hom(cycle(5), complete_graph(3), {0: [2]})
        assert h[0] == 2
        assert is_homomorphism(h, cycle(5), complete_graph(3))

    def test_list_colouring(self):
        two_colours = [[0, 1]] * 4
        assert search_hom(cycle(4), complete_graph(3), two_colours) is not None
        assert search_hom(cycle(5), complete_graph(3), [[0, 1]] * 5) is None

    def test_enumerates_all_automorphisms_of_triangle(self):
        homs = list(iter_homomorphisms(complete_graph(3), complete_graph(3)))
        assert len(homs) == 6
        assert len({h.table for h in homs}) == 6

    def test_injective_search_needs_room(self):
        assert list(iter_homomorphisms(cycle(4), complete_graph(2), injective=True)) == []

    def test_limit(self):
        assert len(list(iter_homomorphisms(complete_graph(3), complete_graph(4), limit=2))) == 2

    def test_trace_records_decisions(self):
        root = TraceNode.root("search")
        h = search_hom(cycle(5), complete_graph(3), trace=root)
        assert h is not None
        assert root.count("solution") == 1
        assert all(node.variable is not None for node in root.decisions())

    def test_trace_of_failed_search_has_no_solution(self):
        root = TraceNode.root("search")
        assert search_hom(directed_cycle(3), directed_cycle(2), trace=root) is None
        assert root.count("solution") == 0

    def test_homomorphic_equivalence(self):
        assert homomorphically_equivalent(cycle(6), complete_graph(2))
        assert not homomorphically_equivalent(cycle(5), complete_graph(3))


class TestOracleFactory:
    @pytest.mark.parametrize("name,cls", [
        ("ac", ArcConsistencyOracle),
        ("pc", PathConsistencyOracle),
        ("search", SearchOracle),
        ("brute", BruteForceOracle),
        ("k4", KConsistencyOracle),
    ])
    def test_create_by_name(self, name, cls):
        assert isinstance(OracleFactory.create(name), cls)

    def test_path_consistency_falls_back_on_wide_templates(self):
        oracle = OracleFactory.create("pc", template=pss_template())
        assert isinstance(oracle, KConsistencyOracle)
        assert oracle.k == 3

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="Unknown oracle"):
            OracleFactory.create("magic")


class TestConstructSolution:
    def test_path_consistency_builds_solutions_for_tournaments(self, random_digraph):
        template = transitive_tournament(3)
        oracle = PathConsistencyOracle()
        for _ in range(30):
            g = random_digraph(5, 0.25)
            expected = search_hom(g, template) is not None
            h = construct_solution(g, template, oracle)
            assert (h is not None) == expected
            if h is not None:
                assert is_homomorphism(h, g, template)

    def test_brute_force_oracle_gives_identical_verdicts(self, random_digraph):
        for _ in range(20):
            g = random_digraph(4, 0.4)
            h = random_digraph(3, 0.5)
            built = construct_solution(g, h, BruteForceOracle())
            assert (built is not None) == (brute_force_hom(g, h) is not None)

    def test_incomplete_oracle_is_reported(self):
        with pytest.raises(OracleInconsistencyError):
            construct_solution(complete_graph(3), complete_graph(2), ArcConsistencyOracle())

    def test_number_of_oracle_calls_is_bounded(self):
        g, template = cycle(6), complete_graph(3)
        oracle = CountingOracle(SearchOracle())
        assert construct_solution(g, template, oracle) is not None
        assert oracle.calls <= 1 + g.size * template.size

    def test_solution_respects_lists_outside_the_core(self):
        template = cycle(6)
        h = construct_solution(cycle(4), template, SearchOracle(), {0: [4]})
        assert h[0] == 4
        assert is_homomorphism(h, cycle(4), template)

    def test_trace_records_pins(self):
        root = TraceNode.root("construct")
        construct_solution(cycle(4), complete_graph(2), SearchOracle(), trace=root)
        assert root.count("kept") == 4
