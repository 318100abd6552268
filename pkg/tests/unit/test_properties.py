"""Unit tests for consequence-relation condition checks."""

import random

from src.catalog import get_matrix
from src.companions.instances import Instance, parse_instance, sample_instances
from src.companions.oracles import ConsequenceOracle, Provenance, left_companion, matrix_oracle
from src.companions.properties import (
    companion_violations,
    consequence_violations,
    random_substitution,
)
from src.syntax.formula import HEYTING
from src.syntax.generate import enumerate_formulas
from src.syntax.parser import parse_formula


def _instances(count=40, seed=3):
    return sample_instances(HEYTING, count, seed, max_depth=2)


class TestConsequenceViolations:
    """Test cases for consequence_violations."""

    def test_matrix_consequence_is_a_consequence_relation(self):
        oracle = matrix_oracle([get_matrix("H3")])
        assert consequence_violations(oracle, HEYTING, _instances(), random.Random(1)) == []

    def test_left_companion_is_a_consequence_relation(self):
        oracle = left_companion(matrix_oracle([get_matrix("B2")]))
        assert consequence_violations(oracle, HEYTING, _instances(), random.Random(2)) == []

    def test_reflexivity_failure(self):
        never = ConsequenceOracle(lambda premises, conclusion: False, Provenance.MATRIX, "never")
        violations = consequence_violations(never, HEYTING, _instances(5), random.Random(0))
        assert [v.condition for v in violations] == ["reflexivity"] * 5
        assert str(violations[0]).startswith("reflexivity fails for never: ")

    def test_monotonicity_failure(self):
        def only_empty(premises, conclusion):
            return not premises

        oracle = ConsequenceOracle(only_empty, Provenance.MATRIX, "empty-only")
        instances = [Instance((), parse_formula("p -> p"))]
        violations = consequence_violations(oracle, HEYTING, instances, random.Random(0))
        assert "monotonicity" in {v.condition for v in violations}

    def test_random_substitution_covers_variables(self):
        sigma = random_substitution(HEYTING, random.Random(5))
        assert sigma.domain == frozenset({"p", "q", "r"})


class TestCompanionViolations:
    """Test cases for companion_violations."""

    def test_left_companion_of_b2(self):
        base = matrix_oracle([get_matrix("B2")])
        theorems = list(enumerate_formulas(HEYTING, ("p", "q"), 1))
        assert companion_violations(left_companion(base), base, _instances(), theorems) == []

    def test_containment_failure(self):
        base = matrix_oracle([get_matrix("B2")])
        always = ConsequenceOracle(lambda premises, conclusion: True, Provenance.COMPANION, "all")
        violations = companion_violations(always, base, [parse_instance("p |- q")], [])
        assert violations
        assert {v.condition for v in violations} == {"containment in base"}
