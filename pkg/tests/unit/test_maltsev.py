"""Unit tests for forks, compact representations and the Maltsev solver."""

import numpy as np
import pytest

from homlab.errors import VerificationError
from homlab.logic.relation import Relation, closure
from homlab.maltsev import (
    CompactRep,
    Fork,
    check_maltsev_polymorphism,
    check_representation,
    closure_under_maltsev,
    compact_representation,
    fix_values,
    forks,
    is_maltsev,
    next_representation,
    nonempty,
    solve,
    solve_mod_p,
    solve_sum_instance,
    sum_system,
)
from homlab.polymorphisms.operation import (
    affine_maltsev,
    boolean_minority,
    median,
    minority_first_on_distinct,
    minority_two_on_distinct,
)
from homlab.search.brute_force import brute_force_hom
from homlab.structures.library import affine_template, complete_graph, parity_template
from homlab.structures.signature import Signature
from homlab.structures.structure import Structure, is_homomorphism

MINORITY = boolean_minority()
MALTSEV_OPERATIONS = [MINORITY, affine_maltsev(3), minority_first_on_distinct(), minority_two_on_distinct()]


def _odd_first_three() -> Relation:
    """t_1 + t_2 + t_3 = 1 mod 2, fourth coordinate free."""
    return Relation.of(4, 2, [t for t in Relation.full(4, 2) if sum(t[:3]) % 2 == 1])


def _parity_instance(last: str) -> Structure:
    return Structure(parity_template().signature, 5, {
        "L1": [(0, 1, 2), (1, 2, 3), (2, 3, 4)] + ([(0, 2, 4)] if last == "L1" else []),
        "L0": [(0, 2, 4)] if last == "L0" else [],
    })


def _random_instance(rng, template: Structure, n: int) -> Structure:
    relations = {}
    for symbol, arity in template.signature:
        relations[symbol] = [tuple(rng.randrange(n) for _ in range(arity)) for _ in range(rng.randint(0, 2))]
    return Structure(template.signature, n, relations)


def _random_invariant_relation(rng, m, arity: int) -> Relation:
    n = m.domain_size
    seeds = [tuple(rng.randrange(n) for _ in range(arity)) for _ in range(rng.randint(1, 3))]
    return closure(Relation.of(arity, n, seeds), [m])


def _binary_template(rng, m) -> Structure:
    relation = _random_invariant_relation(rng, m, 2)
    return Structure(Signature.of(("R", 2)), m.domain_size, {"R": relation.tuples})


# ---------------------------------------------------------------------------
# Forks and representations
# ---------------------------------------------------------------------------

class TestForks:
    def test_forks_of_the_full_square(self):
        assert len(forks(Relation.full(2, 2))) == 8

    def test_full_representation_has_the_forks_of_the_full_power(self):
        assert forks(CompactRep.full(3, 3)) == forks(Relation.full(3, 3))
        assert len(CompactRep.full(3, 3)) == 7

    def test_forks_of_the_diagonal(self):
        assert forks(Relation.diagonal(2)) == {
            Fork(1, 0, 0), Fork(1, 0, 1), Fork(1, 1, 0), Fork(1, 1, 1), Fork(2, 0, 0), Fork(2, 1, 1),
        }

    def test_is_maltsev(self):
        assert is_maltsev(MINORITY)
        assert is_maltsev(affine_maltsev(5))
        assert not is_maltsev(median(3))

    def test_representation_tuples_are_validated(self):
        with pytest.raises(ValueError, match="arity 2"):
            CompactRep.of(2, 2, [(0, 1, 1)])


class TestCompactRepresentation:
    def test_closure_recovers_the_relation(self):
        r = _odd_first_three()
        assert len(r) == 8
        rep = compact_representation(r)
        assert rep.tuples <= r.tuples
        assert closure_under_maltsev(rep, MINORITY) == r

    @pytest.mark.parametrize("m", MALTSEV_OPERATIONS)
    def test_random_invariant_relations(self, m, rng):
        for _ in range(25):
            r = _random_invariant_relation(rng, m, rng.randint(1, 3))
            rep = compact_representation(r)
            assert closure_under_maltsev(rep, m) == r
            check_representation(rep, m, r)

    def test_check_representation_reports_missing_forks(self):
        rep = CompactRep.of(2, 2, [(0, 0)])
        with pytest.raises(VerificationError, match="misses forks"):
            check_representation(rep, MINORITY, Relation.full(2, 2))

    def test_closure_needs_a_maltsev_operation(self):
        with pytest.raises(ValueError, match="not a Maltsev"):
            closure_under_maltsev(CompactRep.full(1, 3), median(3))


# ---------------------------------------------------------------------------
# Nonempty, Fix-values and Next
# ---------------------------------------------------------------------------

class TestProcedures:
    def test_nonempty(self):
        rep = CompactRep.of(2, 2, [(0, 0), (1, 1)])
        assert nonempty(rep, [1], [(1,)], MINORITY) == (1, 1)
        assert nonempty(rep, [1, 2], [(0, 1)], MINORITY) is None

    def test_nonempty_finds_tuples_outside_the_representation(self):
        rep = compact_representation(_odd_first_three())
        found = nonempty(rep, [1, 2, 3, 4], [(1, 1, 1, 1)], MINORITY)
        assert found == (1, 1, 1, 1)

    def test_nonempty_rejects_bad_positions(self):
        with pytest.raises(ValueError, match="out of range"):
            nonempty(CompactRep.full(2, 2), [3], [(0,)], MINORITY)

    def test_nonempty_rejects_targets_not_preserved(self):
        with pytest.raises(ValueError, match="not preserved"):
            nonempty(CompactRep.full(2, 2), [1, 2], [(0, 0), (0, 1), (1, 0)], MINORITY)

    def test_fix_values(self):
        rep = compact_representation(_odd_first_three())
        pinned = fix_values(rep, [1], MINORITY)
        expected = Relation.of(4, 2, [t for t in Relation.full(4, 2) if t[0] == 1 and (t[1] + t[2]) % 2 == 0])
        assert closure_under_maltsev(pinned, MINORITY) == expected

    def test_fix_values_to_an_impossible_prefix(self):
        rep = CompactRep.of(2, 2, [(0, 0), (1, 1)])
        assert fix_values(rep, [0, 1], MINORITY).is_empty

    def test_fix_values_rejects_too_many_values(self):
        with pytest.raises(ValueError, match="Cannot fix 3 values"):
            fix_values(CompactRep.full(2, 2), [0, 0, 0], MINORITY)

    def test_next_representation(self):
        square = CompactRep.full(2, 2)
        assert next_representation(square, [1, 2], [(0, 0), (1, 1)], MINORITY).sorted() == [(0, 0), (1, 1)]

    def test_next_matches_filtering_the_closure(self, rng):
        m = affine_maltsev(3)
        for _ in range(20):
            r = _random_invariant_relation(rng, m, 3)
            s = _random_invariant_relation(rng, m, 2)
            positions = rng.sample([1, 2, 3], 2)
            rep = next_representation(compact_representation(r), positions, s, m)
            expected = Relation.of(3, 3, [t for t in r if tuple(t[i - 1] for i in positions) in s])
            assert closure_under_maltsev(rep, m) == expected

    def test_iterated_next_over_a_contradictory_parity_system(self):
        rep = CompactRep.full(5, 2)
        instance = _parity_instance("L0")
        for symbol, scope in instance.iter_tuples():
            allowed = Relation.from_structure(parity_template(), symbol)
            rep = next_representation(rep, [v + 1 for v in scope], allowed, MINORITY)
        assert rep.is_empty


# ---------------------------------------------------------------------------
# Solver
# ---------------------------------------------------------------------------

class TestSolve:
    def test_contradictory_parity_system(self):
        result = solve(_parity_instance("L0"), parity_template(), MINORITY)
        assert not result.satisfiable
        assert result.witness is None
        assert result.constraints == 4
        assert solve_sum_instance(_parity_instance("L0"), 2) is None

    def test_consistent_parity_system_gives_least_witness(self):
        result = solve(_parity_instance("L1"), parity_template(), MINORITY)
        assert result.satisfiable
        assert result.witness.table == (0, 0, 1, 0, 0)
        assert is_homomorphism(result.witness, _parity_instance("L1"), parity_template())

    def test_edge_template_with_minority(self):
        assert not solve(complete_graph(3), complete_graph(2), MINORITY).satisfiable
        assert solve(complete_graph(2), complete_graph(2), MINORITY).satisfiable

    def test_rejects_operations_that_are_not_maltsev_polymorphisms(self):
        with pytest.raises(ValueError, match="not a Maltsev"):
            solve(complete_graph(2), complete_graph(2), median(2))
        with pytest.raises(ValueError, match="acts on 3 elements"):
            check_maltsev_polymorphism(affine_maltsev(3), complete_graph(2))

    @pytest.mark.parametrize("template,m", [
        (parity_template(), MINORITY),
        (affine_template(3), affine_maltsev(3)),
    ])
    def test_agrees_with_brute_force_on_linear_templates(self, template, m, rng):
        p = template.size
        for _ in range(40):
            instance = _random_instance(rng, template, rng.randint(1, 5))
            result = solve(instance, template, m)
            expected = brute_force_hom(instance, template)
            assert result.satisfiable == (expected is not None)
            assert result.satisfiable == (solve_sum_instance(instance, p) is not None)
            if result.satisfiable:
                assert result.witness == expected

    @pytest.mark.parametrize("m", [minority_first_on_distinct(), minority_two_on_distinct()])
    def test_agrees_with_brute_force_on_minority_templates(self, m, rng):
        for _ in range(20):
            template = _binary_template(rng, m)
            instance = _random_instance(rng, template, rng.randint(2, 5))
            result = solve(instance, template, m)
            assert result.satisfiable == (brute_force_hom(instance, template) is not None)


class TestLinearAlgebra:
    def test_solve_mod_p(self):
        assert solve_mod_p([[1, 1], [1, 1]], [0, 1], 2) is None
        assert solve_mod_p([[1, 1]], [1], 3).tolist() == [1, 0]

    def test_solution_satisfies_the_system(self, rng):
        for _ in range(20):
            a = np.array([[rng.randrange(5) for _ in range(4)] for _ in range(3)])
            x = np.array([rng.randrange(5) for _ in range(4)])
            b = a @ x % 5
            solution = solve_mod_p(a, b, 5)
            assert solution is not None
            assert np.array_equal(a @ solution % 5, b)

    def test_sum_system_reads_constants_off_symbols(self):
        system = sum_system(_parity_instance("L0"), 2)
        assert system.variables == 5
        assert sorted(system.rhs.tolist()) == [0, 1, 1, 1]

    def test_sum_system_needs_numbered_symbols(self):
        with pytest.raises(ValueError, match="does not name a sum constraint"):
            sum_system(complete_graph(2), 2)
