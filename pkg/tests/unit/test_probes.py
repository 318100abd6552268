"""Unit tests for paraconsistency and deduction-theorem probes."""

import pytest

from src.catalog.algebras import chain_three
from src.catalog.probes import (
    Paraconsistency,
    classify_paraconsistency,
    deduction_instance,
    deduction_transfer_violations,
    enumerate_deduction_instances,
    predict_companion_class,
    probe_deduction,
    probe_ecq,
    probe_land_ecq,
    probe_lnc,
    rm3_non_companion_witness,
)
from src.catalog.registry import get_matrix
from src.catalog.systems import FALSUM
from src.semantics.algebra import Matrix, evaluate, truth_table
from src.semantics.classes import MissingOperatorError
from src.syntax.formula import HEYTING
from src.syntax.parser import parse_formula


class TestParaconsistencyProbes:
    """Test cases for ECQ, ∧-ECQ and LNC probes."""

    @pytest.mark.parametrize(
        "matrix_id,expected", [("B2", True), ("PS3", False), ("B2+w", False), ("M3", False)]
    )
    def test_ecq(self, matrix_id, expected):
        assert probe_ecq(get_matrix(matrix_id)) is expected

    @pytest.mark.parametrize("matrix_id,expected", [("M3", False), ("prerough3", True)])
    def test_land_ecq(self, matrix_id, expected):
        assert probe_land_ecq(get_matrix(matrix_id)) is expected

    @pytest.mark.parametrize(
        "matrix_id,expected", [("prerough3", False), ("M3", True), ("B2+w", True)]
    )
    def test_lnc(self, matrix_id, expected):
        assert probe_lnc(get_matrix(matrix_id)) is expected

    def test_missing_negation(self):
        with pytest.raises(MissingOperatorError):
            probe_ecq(Matrix(chain_three(), frozenset({"1"})))


class TestClassification:
    """Test cases for classify_paraconsistency and predict_companion_class."""

    @pytest.mark.parametrize(
        "matrix_id,expected",
        [
            ("B2", Paraconsistency.NOT),
            ("B2+w", Paraconsistency.WEAK),
            ("M3", Paraconsistency.WEAK),
            ("prerough3", Paraconsistency.NOT),
            ("prerough3+w", Paraconsistency.STRONG),
        ],
    )
    def test_classify(self, matrix_id, expected):
        assert classify_paraconsistency(get_matrix(matrix_id)) is expected

    @pytest.mark.parametrize("matrix_id", ["B2", "H3", "M3", "PS3", "prerough3", "prerough3-std"])
    def test_prediction_matches_extension(self, matrix_id):
        predicted = predict_companion_class(get_matrix(matrix_id))
        assert predicted is classify_paraconsistency(get_matrix(f"{matrix_id}+w"))

    def test_value_text(self):
        assert Paraconsistency.WEAK.value == "weakly paraconsistent"


class TestDeductionProbe:
    """Test cases for probe_deduction."""

    def test_rm3_witness(self):
        m3 = get_matrix("M3")
        instance = deduction_instance([], "p | ~p", "q | ~q")
        row = probe_deduction(m3, [instance]).rows[0]
        assert row.premise_side
        assert not row.implication_side
        assert not row.dt_holds
        assert row.witness is not None
        assert row.witness.valuation == {"p": "1", "q": "1/2"}
        assert evaluate(instance.implication, row.witness.valuation, m3.algebra) == "0"
        assert "DT fails" in row.describe()

    def test_ps3_deduction_theorem(self):
        instance = deduction_instance([], "p | ~p", "q | ~q")
        report = probe_deduction(get_matrix("PS3"), [instance])
        assert report.dt_holds
        assert report.converse_holds

    def test_contaminated_heyting_proviso(self):
        instance = deduction_instance([], "0", "q")
        assert instance.proviso
        row = probe_deduction(get_matrix("H3+w"), [instance]).rows[0]
        assert row.premise_side and row.implication_side

    def test_instance_text(self):
        instance = deduction_instance(["q"], "p", "q")
        assert not instance.proviso
        assert instance.describe() == "Σ={q}, α=p, β=q"
        assert deduction_instance([], "p", "p").describe() == "Σ={∅}, α=p, β=p"

    def test_converse_fails_without_proviso(self):
        instance = deduction_instance([], "p & ~p", "q & ~q")
        row = probe_deduction(get_matrix("B2+w"), [instance]).rows[0]
        assert not row.premise_side
        assert row.implication_side
        assert row.dt_holds
        assert not row.converse_holds
        assert row.witness is not None
        assert "proviso var(α) ⊆ var(β) violated" in row.describe()

    def test_enumeration_count(self):
        instances = list(enumerate_deduction_instances(HEYTING, max_depth=0, max_premises=1))
        assert len(instances) == 16 + 4 * 16


class TestDeductionTransfer:
    """Test cases for deduction_transfer_violations."""

    def test_heyting_chain(self):
        instances = enumerate_deduction_instances(HEYTING, max_depth=1, max_premises=0)
        assert deduction_transfer_violations(get_matrix("H3"), instances) == []

    def test_boolean_with_premises(self):
        instances = enumerate_deduction_instances(
            HEYTING, max_depth=0, max_premises=1
        )
        assert deduction_transfer_violations(get_matrix("B2"), instances) == []

    def test_base_failure_is_reported(self):
        instance = deduction_instance([], "p | ~p", "q | ~q")
        violations = deduction_transfer_violations(get_matrix("M3"), [instance])
        assert len(violations) == 1
        assert "M3 itself fails" in str(violations[0])


class TestNonCompanionWitness:
    """Test cases for the RM3 non-companion witness."""

    def test_rm3(self):
        witness = rm3_non_companion_witness()
        assert witness.entails
        assert not witness.conclusion_is_theorem
        assert witness.is_witness
        assert witness.describe().endswith("var-included subsets: {}")


class TestFalsum:
    """Test cases for the falsum abbreviation of LPS3."""

    def test_constant_zero_in_ps3(self):
        rows = truth_table(parse_formula(FALSUM), get_matrix("PS3").algebra)
        assert {value for _, value in rows} == {"0"}
