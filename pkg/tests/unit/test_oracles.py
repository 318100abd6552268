"""Unit tests for consequence oracles, companions and oracle comparison."""

from pathlib import Path

import pytest

from src.catalog import get_matrix, get_system
from src.companions.instances import enumerate_instances, load_instances, parse_instance
from src.companions.oracles import (
    Outcome,
    Provenance,
    compare_oracles,
    hilbert_oracle,
    left_companion,
    matrix_oracle,
    semantic_left_companion,
)
from src.syntax.formula import MINIMAL
from src.syntax.parser import parse_formula

INSTANCES = Path(__file__).resolve().parents[2] / "corpus" / "instances"


@pytest.fixture
def b2_oracle():
    return matrix_oracle([get_matrix("B2")])


class TestMatrixOracle:
    """Test cases for matrix_oracle."""

    def test_modus_ponens(self, b2_oracle):
        assert b2_oracle([parse_formula("p"), parse_formula("p -> q")], parse_formula("q"))
        assert b2_oracle.label == "B2"
        assert b2_oracle.provenance is Provenance.MATRIX

    def test_verdict_text(self, b2_oracle):
        assert b2_oracle.verdict_text(True) == "holds"
        assert b2_oracle.verdict_text(False) == "fails"


class TestLeftCompanion:
    """Test cases for left_companion and semantic_left_companion."""

    def test_explosion_needs_included_premises(self, b2_oracle):
        companion = left_companion(b2_oracle)
        explosion = ([parse_formula("p"), parse_formula("~p")], parse_formula("q"))
        assert b2_oracle(*explosion)
        assert not companion(*explosion)
        assert companion.label == "B2^l"
        assert companion.base is b2_oracle

    def test_weakening_kept(self, b2_oracle):
        assert left_companion(b2_oracle)([parse_formula("p")], parse_formula("p | q"))

    def test_semantic_companion_label(self):
        assert semantic_left_companion([get_matrix("B2")]).label == "B2,B2+w"

    def test_semantic_companion_agrees(self, b2_oracle):
        instances = list(enumerate_instances(MINIMAL, ("p", "q"), 1))
        report = compare_oracles(
            left_companion(b2_oracle), semantic_left_companion([get_matrix("B2")]), instances
        )
        assert len(report.rows) == 110
        assert report.all_agree


class TestHilbertOracle:
    """Test cases for hilbert_oracle."""

    def test_semi_decision(self):
        oracle = hilbert_oracle(get_system("minimal-re"))
        assert not oracle.exhaustive
        assert oracle.verdict_text(False) == "not found within limits"
        assert not oracle([parse_formula("p & q")], parse_formula("p"))
        assert oracle([parse_formula("p")], parse_formula("p | q"))


class TestCompareOracles:
    """Test cases for compare_oracles and ComparisonReport."""

    def test_minimal_companion_against_restricted_rules(self):
        minimal = get_system("minimal")
        a = left_companion(hilbert_oracle(minimal))
        b = hilbert_oracle(minimal.restricted())
        report = compare_oracles(a, b, load_instances(INSTANCES / "minimal.txt", MINIMAL))

        counts = report.counts()
        assert counts[Outcome.B_ONLY] == 0
        assert counts[Outcome.A_ONLY] == 1
        assert report.disagreements()[0].instance == parse_instance("p & q |- p | q")
        assert report.summary() == "8 instance(s): 7 agree, 1 minimal^l-only, 0 minimal-re-only"
        assert report.lines()[0] == (
            "(p & q) |- (p | q)  [minimal^l: holds; minimal-re: not found within limits] a-only"
        )
