"""Unit tests for pp formulas, canonical databases, definability and reductions."""

import pytest

from homlab.errors import SignatureMismatchError
from homlab.logic import (
    Atom,
    PPFormula,
    Relation,
    binary_encoding,
    canonical_database,
    canonical_database_with_map,
    canonical_query,
    closure_refuter,
    defined_relation,
    eliminate_equalities,
    evaluate,
    is_pp_definable,
    pp_reduce_instance,
)
from homlab.polymorphisms.operation import is_polymorphism, minimum
from homlab.search.backtracking import search_hom
from homlab.structures.constructions import expand
from homlab.structures.library import (
    boolean_structure,
    complete_graph,
    cycle,
    loop,
    pss_template,
    transitive_tournament,
)
from homlab.structures.signature import Signature
from homlab.structures.structure import Structure, is_homomorphism

WALK_OF_LENGTH_TWO = "pp free x z ; exists y ; E(x,y) & E(y,z)"


# ---------------------------------------------------------------------------
# Formulas
# ---------------------------------------------------------------------------

class TestAtom:
    def test_parse(self):
        assert Atom.parse("E(x, y)") == Atom.relation("E", "x", "y")
        assert Atom.parse("x = y").is_equality
        assert Atom.parse("FALSE").is_false

    def test_reserved_symbols(self):
        with pytest.raises(ValueError, match="reserved"):
            Atom.relation("TRUE", "x")

    @pytest.mark.parametrize("text", ["E(x,", "E()", "E(x y)", "= x"])
    def test_malformed(self, text):
        with pytest.raises(ValueError, match="Malformed"):
            Atom.parse(text)


class TestPPFormula:
    def test_parse_and_print(self):
        phi = PPFormula.parse(WALK_OF_LENGTH_TWO)
        assert phi.free == ("x", "z")
        assert phi.bound == ("y",)
        assert str(phi) == "pp free x z ; exists y ; E(x,y) & E(y,z)"

    def test_multiline_text(self):
        phi = PPFormula.parse("pp free x\n ; E(x,x)")
        assert phi.atoms == (Atom.relation("E", "x", "x"),)

    def test_empty_body_is_true(self):
        phi = PPFormula.parse("pp free x")
        assert phi.atoms == ()
        assert str(phi) == "pp free x ; TRUE"

    def test_must_start_with_pp(self):
        with pytest.raises(ValueError, match="starts with 'pp'"):
            PPFormula.parse("free x ; E(x,x)")

    def test_free_and_bound_overlap(self):
        with pytest.raises(ValueError, match="both free and bound"):
            PPFormula.parse("pp free x ; exists x ; E(x,x)")

    def test_undeclared_variable(self):
        with pytest.raises(ValueError, match="undeclared"):
            PPFormula.parse("pp free x ; E(x,y)")

    def test_signature_checks(self):
        phi = PPFormula.parse("pp free x ; R(x,x,x)")
        with pytest.raises(SignatureMismatchError):
            phi.check_signature(complete_graph(2).signature)
        inconsistent = PPFormula.parse("pp free x y ; E(x,y) & E(x)")
        with pytest.raises(SignatureMismatchError, match="different arities"):
            inconsistent.inferred_signature()


# ---------------------------------------------------------------------------
# Canonical structures
# ---------------------------------------------------------------------------

class TestCanonical:
    def test_canonical_query_of_a_loop(self):
        assert str(canonical_query(loop())) == "pp ; exists v0 ; E(v0,v0)"

    @pytest.mark.parametrize("a", [cycle(5), transitive_tournament(3), pss_template()])
    def test_canonical_database_of_canonical_query(self, a):
        assert canonical_database(canonical_query(a), a.signature) == a

    def test_equalities_merge_into_the_earlier_variable(self):
        phi = PPFormula.parse("pp free x ; exists y z ; z = y & y = x & E(x,z)")
        assert eliminate_equalities(phi) == {"x": "x", "y": "x", "z": "x"}
        cd, element = canonical_database_with_map(phi)
        assert cd.size == 1
        assert cd.edges == {(0, 0)}
        assert set(element.values()) == {0}

    def test_false_has_no_canonical_database(self):
        with pytest.raises(ValueError, match="FALSE"):
            canonical_database(PPFormula.parse("pp free x ; FALSE"))


class TestSemantics:
    def test_evaluate(self):
        phi = PPFormula.parse(WALK_OF_LENGTH_TWO)
        assert evaluate(phi, complete_graph(3), {"x": 0, "z": 0})
        assert not evaluate(phi, transitive_tournament(3), {"x": 0, "z": 1})
        assert evaluate(phi, transitive_tournament(3), {"x": 0, "z": 2})

    def test_missing_value(self):
        with pytest.raises(ValueError, match="has no value"):
            evaluate(PPFormula.parse(WALK_OF_LENGTH_TWO), complete_graph(3), {"x": 0})

    def test_defined_relation(self):
        walks = defined_relation(PPFormula.parse(WALK_OF_LENGTH_TWO), transitive_tournament(3))
        assert walks.sorted() == [(0, 2)]

    def test_repeated_free_variables_in_equalities(self):
        phi = PPFormula.parse("pp free x y ; x = y")
        assert defined_relation(phi, complete_graph(3)) == Relation.diagonal(3)

    def test_false_defines_the_empty_relation(self):
        assert len(defined_relation(PPFormula.parse("pp free x ; FALSE"), complete_graph(2))) == 0

    def test_defined_relations_are_preserved_by_polymorphisms(self):
        f = minimum(3)
        b = transitive_tournament(3)
        assert is_polymorphism(f, b)
        for text in [WALK_OF_LENGTH_TWO, "pp free x y z ; E(x,y) & E(x,z)", "pp free x ; exists y ; E(y,x)"]:
            assert defined_relation(PPFormula.parse(text), b).is_preserved_by(f)


# ---------------------------------------------------------------------------
# Definability
# ---------------------------------------------------------------------------

class TestDefinability:
    def test_disequality_in_five_cycle(self):
        result = is_pp_definable(Relation.disequality(5), cycle(5), refute_first=False)
        assert result.definable
        assert defined_relation(result.witness, cycle(5)) == Relation.disequality(5)

    def test_disequality_in_six_cycle(self):
        result = is_pp_definable(Relation.disequality(6), cycle(6))
        assert not result.definable
        assert is_polymorphism(result.counterexample, cycle(6))
        assert not Relation.disequality(6).is_preserved_by(result.counterexample)

    def test_disequality_in_six_cycle_without_the_refuter(self):
        result = is_pp_definable(Relation.disequality(6), cycle(6), refute_first=False)
        assert not result.definable

    def test_empty_relation_is_defined_by_false(self):
        result = is_pp_definable(Relation(2, 3, frozenset()), complete_graph(3))
        assert result.definable
        assert result.witness.has_false

    def test_domain_mismatch(self):
        with pytest.raises(ValueError, match="does not match"):
            is_pp_definable(Relation.diagonal(2), complete_graph(3))

    def test_refuter_agrees_with_the_witness_construction(self, rng):
        for _ in range(25):
            edges = [(u, v) for u in range(2) for v in range(2) if rng.random() < 0.5] or [(0, 1)]
            b = boolean_structure({"E": edges})
            r = Relation.of(2, 2, [t for t in Relation.full(2, 2) if rng.random() < 0.5])
            # polymorphisms of arity |r| decide definability; four binary tuples over {0,1} are everything
            refuted = closure_refuter(r, b, max_arity=min(3, max(1, len(r)))) is not None
            assert is_pp_definable(r, b, refute_first=False).definable == (not refuted)


# ---------------------------------------------------------------------------
# Reductions
# ---------------------------------------------------------------------------

class TestReduction:
    def _expanded(self, base: Structure, definitions):
        extra = {
            symbol: (len(phi.free), defined_relation(phi, base).tuples) for symbol, phi in definitions.items()
        }
        return expand(base, extra)

    def test_reduction_is_equisatisfiable(self, rng):
        base = cycle(5)
        definitions = {"W": PPFormula.parse(WALK_OF_LENGTH_TWO)}
        expanded = self._expanded(base, definitions)
        for _ in range(30):
            n = rng.randint(2, 5)
            relations = {
                "E": [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 3))],
                "W": [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, 3))],
            }
            instance = Structure(expanded.signature, n, relations)
            reduced = pp_reduce_instance(instance, definitions, base, expanded)
            assert reduced.signature == base.signature
            assert (search_hom(instance, expanded) is None) == (search_hom(reduced, base) is None)

    def test_equalities_are_merged(self):
        base = complete_graph(3)
        definitions = {"Q": PPFormula.parse("pp free x y ; x = y")}
        signature = Signature.of(("E", 2), ("Q", 2))
        instance = Structure(signature, 2, {"E": [(0, 1)], "Q": [(0, 1)]})
        reduced = pp_reduce_instance(instance, definitions, base)
        assert reduced.size == 1
        assert search_hom(reduced, base) is None

    def test_false_definition_makes_the_instance_unsatisfiable(self):
        definitions = {"N": PPFormula.parse("pp free x ; FALSE")}
        instance = Structure(Signature.of(("E", 2), ("N", 1)), 1, {"N": [(0,)]})
        assert pp_reduce_instance(instance, definitions, complete_graph(2)) is None

    def test_undefined_symbol(self):
        instance = Structure(Signature.of(("E", 2), ("X", 1)), 1, {"X": [(0,)]})
        with pytest.raises(SignatureMismatchError, match="neither in the base signature nor defined"):
            pp_reduce_instance(instance, {}, complete_graph(2))

    def test_definitions_are_checked_against_the_expansion(self):
        base = cycle(5)
        definitions = {"W": PPFormula.parse(WALK_OF_LENGTH_TWO)}
        wrong = expand(base, {"W": (2, [(0, 1)])})
        instance = Structure(wrong.signature, 2, {"W": [(0, 1)]})
        with pytest.raises(ValueError, match="does not define its relation"):
            pp_reduce_instance(instance, definitions, base, wrong)


class TestBinaryEncoding:
    def test_signature(self):
        encoding = binary_encoding(pss_template(), 3)
        assert len(encoding.structure.signature) == 11
        assert encoding.structure.size == 27
        assert encoding.structure.signature.max_arity == 2

    def test_d_must_cover_the_arities(self):
        with pytest.raises(ValueError, match="at least the maximal arity"):
            binary_encoding(pss_template(), 2)

    def test_translation_is_equisatisfiable(self, rng):
        template = pss_template()
        encoding = binary_encoding(template, 3)
        for _ in range(20):
            n = rng.randint(2, 4)
            instance = Structure(template.signature, n, {
                "C": [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(0, 3))],
                "R": [tuple(rng.randrange(n) for _ in range(3)) for _ in range(rng.randint(0, 2))],
            })
            translated = encoding.translate(instance)
            solution = search_hom(translated, encoding.structure)
            assert (solution is None) == (search_hom(instance, template) is None)
            if solution is not None:
                assert is_homomorphism(encoding.decode(solution, n), instance, template)
