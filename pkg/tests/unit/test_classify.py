"""Unit tests for the complexity classifiers."""

from itertools import product

import pytest

from homlab.classify import (
    Complexity,
    PropertyVerdict,
    bounded_width,
    cyclic_arity_profile,
    dichotomy,
    hell_nesetril,
    preservation_violation,
    schaefer,
    smooth_digraph,
    tree_duality,
)
from homlab.config import Guards
from homlab.consistency import pc, sac
from homlab.maltsev import solve
from homlab.polymorphisms.conditions import PolymorphismKind
from homlab.polymorphisms.operation import boolean_minority, is_polymorphism, minimum
from homlab.polymorphisms.search import Outcome, satisfies
from homlab.search.brute_force import brute_force_hom
from homlab.structures.constructions import disjoint_union, singleton_expansion
from homlab.structures.library import (
    affine_template,
    boolean_structure,
    complete_graph,
    cycle,
    directed_cycle,
    loop,
    parity_template,
    pss_template,
    transitive_tournament,
    unbalanced_four_cycle,
)
from homlab.structures.structure import Structure


def _boolean(predicate, arity: int = 3):
    return boolean_structure({"R": [t for t in product((0, 1), repeat=arity) if predicate(*t)]})


HORN = _boolean(lambda x, y, z: not (x and y) or z)
DUAL_HORN = _boolean(lambda x, y, z: x or y or not z)
DISEQUALITY = _boolean(lambda x, y: x != y, arity=2)
ONE_IN_THREE = _boolean(lambda x, y, z: x + y + z == 1)
NOT_ALL_EQUAL = _boolean(lambda x, y, z: not x == y == z)


# ---------------------------------------------------------------------------
# Schaefer
# ---------------------------------------------------------------------------

class TestSchaefer:
    @pytest.mark.parametrize("b,cls", [
        (HORN, "horn"),
        (DUAL_HORN, "dual-horn"),
        (DISEQUALITY, "bijunctive"),
        (parity_template(), "affine"),
    ])
    def test_tractable_fixtures(self, b, cls):
        verdict = schaefer(b)
        assert verdict.complexity is Complexity.P
        assert cls in verdict.classes
        assert is_polymorphism(verdict.operations[cls], b)

    def test_parity_is_only_affine(self):
        assert schaefer(parity_template()).classes == ("affine",)

    def test_classes_are_not_exclusive(self):
        classes = schaefer(HORN).classes
        assert "const0" in classes
        assert "dual-horn" not in classes

    @pytest.mark.parametrize("b", [ONE_IN_THREE, NOT_ALL_EQUAL])
    def test_hard_fixtures(self, b):
        verdict = schaefer(b)
        assert verdict.complexity is Complexity.NP_COMPLETE
        assert verdict.classes == ()
        assert verdict.reason.count("->") == 6

    def test_needs_a_boolean_domain(self):
        with pytest.raises(ValueError, match="Boolean template"):
            schaefer(complete_graph(3))

    def test_preservation_violation(self):
        symbol, rows, image = preservation_violation(minimum(2), ONE_IN_THREE)
        assert symbol == "R"
        assert image not in ONE_IN_THREE.relation("R")
        assert preservation_violation(minimum(2), HORN) is None


# ---------------------------------------------------------------------------
# Graphs and smooth digraphs
# ---------------------------------------------------------------------------

class TestHellNesetril:
    def test_odd_cycle_is_hard(self):
        verdict = hell_nesetril(cycle(5))
        assert verdict.summary() == "NP-complete: non-bipartite, loopless"
        assert len(verdict.vertices) % 2 == 1

    def test_bipartite_graph_is_tractable(self):
        verdict = hell_nesetril(cycle(6))
        assert verdict.tractable
        assert all(verdict.colouring[u] != verdict.colouring[v] for u, v in cycle(6).edges)

    def test_loop_is_tractable(self):
        assert hell_nesetril(disjoint_union(complete_graph(3), loop())).vertices == (3,)

    def test_needs_a_symmetric_graph(self):
        with pytest.raises(ValueError, match="undirected"):
            hell_nesetril(transitive_tournament(2))

    def test_agrees_with_the_general_dichotomy(self, random_digraph, rng):
        for _ in range(6):
            h = random_digraph(rng.randint(2, 4), 0.5, symmetric=True)
            assert hell_nesetril(h).complexity is dichotomy(h).complexity


class TestSmoothDigraph:
    def test_directed_cycles_are_tractable(self):
        verdict = smooth_digraph(disjoint_union(directed_cycle(3), directed_cycle(2)))
        assert verdict.tractable
        assert verdict.stage == "core"

    def test_triangle_is_hard(self):
        verdict = smooth_digraph(complete_graph(3))
        assert verdict.complexity is Complexity.NP_COMPLETE
        assert verdict.stage == "siggers"

    def test_sources_are_rejected(self):
        with pytest.raises(ValueError, match="source or a sink"):
            smooth_digraph(transitive_tournament(3))


# ---------------------------------------------------------------------------
# Dichotomy
# ---------------------------------------------------------------------------

class TestDichotomy:
    def test_directed_triangle(self):
        verdict = dichotomy(directed_cycle(3))
        assert verdict.tractable
        s = verdict.operations["s"]
        assert satisfies(s, PolymorphismKind.SIGGERS_4)
        assert is_polymorphism(s, singleton_expansion(verdict.core.structure))

    def test_transitive_tournament(self):
        assert dichotomy(transitive_tournament(3)).tractable

    def test_triangle(self):
        verdict = dichotomy(complete_graph(3))
        assert verdict.complexity is Complexity.NP_COMPLETE
        assert verdict.decided

    def test_bipartite_graph_reduces_to_its_core(self):
        verdict = dichotomy(cycle(6))
        assert verdict.tractable
        assert verdict.core.structure.size == 2

    def test_guard_gives_an_inconclusive_verdict(self):
        verdict = dichotomy(complete_graph(3), Guards(max_arity=3))
        assert verdict.complexity is Complexity.INCONCLUSIVE
        assert verdict.stage == "siggers"
        assert not verdict.decided


# ---------------------------------------------------------------------------
# Width
# ---------------------------------------------------------------------------

class TestWidth:
    @pytest.mark.parametrize("b", [transitive_tournament(3), pss_template()])
    def test_bounded_width(self, b):
        verdict = bounded_width(b)
        assert verdict.holds
        assert set(verdict.operations) == {"f", "g"}

    def test_triangle_has_unbounded_width(self):
        assert bounded_width(complete_graph(3)).holds is False

    def test_bounded_width_guard(self):
        verdict = bounded_width(transitive_tournament(3), Guards(max_arity=3))
        assert verdict.holds is None
        assert not verdict.decided

    @pytest.mark.parametrize("b,expected", [
        (transitive_tournament(2), True),
        (transitive_tournament(3), True),
        (complete_graph(2), False),
        (unbalanced_four_cycle(), False),
    ])
    def test_tree_duality(self, b, expected):
        assert tree_duality(b).holds is expected

    def test_tree_duality_guard(self):
        verdict = tree_duality(transitive_tournament(3), Guards(max_powerset_domain=2))
        assert verdict.holds is None
        assert verdict.stage == "powerset"

    def test_summary(self):
        assert PropertyVerdict(None, "stopped").summary() == "inconclusive: stopped"
        assert tree_duality(complete_graph(2)).summary().startswith("no: ")


class TestCyclicProfile:
    def test_transitive_tournament_has_every_arity(self):
        profile = cyclic_arity_profile(transitive_tournament(3), 4)
        assert profile.arities == {2, 3, 4}
        assert profile.complete

    def test_directed_triangle(self):
        profile = cyclic_arity_profile(directed_cycle(3), 3)
        assert profile.outcomes == {2: Outcome.FOUND, 3: Outcome.ABSENT}
        assert set(profile.operations) == {2}

    def test_edge_has_only_odd_arities(self):
        assert cyclic_arity_profile(complete_graph(2), 3).arities == {3}

    def test_guard_marks_arities_inconclusive(self, small_guards):
        profile = cyclic_arity_profile(complete_graph(2), 4, small_guards)
        assert profile.outcomes[4] is Outcome.INCONCLUSIVE
        assert not profile.complete

    def test_arity_bound(self):
        with pytest.raises(ValueError, match="at least 2"):
            cyclic_arity_profile(complete_graph(2), 1)



# ---------------------------------------------------------------------------
# Cross-checks between classifiers and solvers
# ---------------------------------------------------------------------------

def _random_parity_instance(rng, n: int) -> Structure:
    relations = {
        symbol: [tuple(rng.randrange(n) for _ in range(3)) for _ in range(rng.randint(0, n))]
        for symbol in ("L0", "L1")
    }
    return Structure(parity_template().signature, n, relations)


class TestCrossChecks:
    @pytest.mark.parametrize("b", [HORN, DISEQUALITY, parity_template(), ONE_IN_THREE, NOT_ALL_EQUAL])
    def test_schaefer_agrees_with_dichotomy(self, b):
        assert schaefer(b).complexity is dichotomy(b).complexity

    @pytest.mark.parametrize("template,solver", [
        (directed_cycle(3), pc),
        (transitive_tournament(3), sac),
        (cycle(6), sac),
    ])
    def test_tractable_digraphs_are_decided_by_a_consistency_solver(self, template, solver, random_digraph, rng):
        assert dichotomy(template).tractable
        for _ in range(30):
            g = random_digraph(rng.randint(2, 5), 0.35)
            assert (solver(g, template) is not None) == (brute_force_hom(g, template) is not None)

    def test_parity_is_decided_by_the_maltsev_solver(self, rng):
        template = parity_template()
        assert dichotomy(template).tractable
        for _ in range(30):
            instance = _random_parity_instance(rng, rng.randint(1, 5))
            expected = brute_force_hom(instance, template) is not None
            assert solve(instance, template, boolean_minority()).satisfiable == expected


@pytest.mark.slow
class TestExhaustiveWidth:
    def test_linear_equations_mod_three_have_unbounded_width(self):
        verdict = bounded_width(affine_template(3))
        assert verdict.holds is False
        assert verdict.core.structure.size == 3
