"""Unit tests for rules, variable-inclusion conditions and Hilbert systems."""

import pytest

from src.catalog import get_system
from src.proofs.system import (
    HilbertSystem,
    HilbertSystemError,
    Proof,
    Rule,
    VariableInclusion,
)
from src.syntax.formula import MINIMAL, Substitution, var
from src.syntax.parser import parse_formula


def _rule(name, premises, conclusion, **kwargs):
    return Rule(name, tuple(parse_formula(p) for p in premises), parse_formula(conclusion), **kwargs)


class TestVariableInclusion:
    """Test cases for VariableInclusion side conditions."""

    def test_missing_variables(self):
        inclusion = VariableInclusion((parse_formula("alpha & beta"),), (parse_formula("alpha"),))
        sigma = Substitution({"alpha": var("p"), "beta": var("q")})
        assert inclusion.missing(sigma) == frozenset({"q"})
        assert not inclusion.holds(sigma)
        assert inclusion.failure_message(sigma) == "var((p & q)) ⊄ var(p)"

    def test_holds_when_collapsed(self):
        inclusion = VariableInclusion((parse_formula("alpha & beta"),), (parse_formula("alpha"),))
        assert inclusion.holds(Substitution({"alpha": var("p"), "beta": var("p")}))

    def test_schematic(self):
        lossless = VariableInclusion((parse_formula("alpha"),), (parse_formula("alpha | beta"),))
        assert lossless.schematic
        assert lossless.describe() == "var(alpha) ⊆ var((alpha | beta))"

    def test_needs_sources_and_targets(self):
        with pytest.raises(HilbertSystemError):
            VariableInclusion((), (parse_formula("alpha"),))


class TestRule:
    """Test cases for rules and their restricted forms."""

    def test_needs_premises(self):
        with pytest.raises(HilbertSystemError, match="at least one premise"):
            Rule("R0", (), parse_formula("alpha"))

    def test_lossy_rule_gets_primed_name(self):
        rule = _rule("R1", ["alpha & beta"], "alpha")
        assert rule.loses_variables
        restricted = rule.restricted()
        assert restricted.name == "R1'"
        assert restricted.condition == rule.standard_inclusion()
        assert restricted.restricted() is restricted

    def test_known_rule_names(self):
        assert _rule("MP", ["alpha", "alpha -> beta"], "beta").restricted().name == "RMP"

    def test_lossless_rule_is_unchanged(self):
        rule = _rule("R2", ["alpha"], "alpha | beta")
        assert not rule.loses_variables
        assert rule.restricted() is rule

    def test_custom_restricted_form(self):
        hs = get_system("HPRL").rule("HS").restricted()
        assert hs.name == "RHS"
        assert hs.condition is not None
        assert hs.condition.describe() == "var(beta) ⊆ var(alpha) ∪ var(gamma)"

    def test_describe(self):
        restricted = _rule("R1", ["alpha & beta"], "alpha").restricted()
        assert restricted.describe() == (
            "R1': (alpha & beta) / alpha  provided var((alpha & beta)) ⊆ var(alpha)"
        )


class TestHilbertSystem:
    """Test cases for HilbertSystem."""

    def test_duplicate_names(self):
        axiom = parse_formula("alpha | alpha")
        with pytest.raises(HilbertSystemError, match="duplicate"):
            HilbertSystem("dup", MINIMAL, (("A1", axiom), ("A1", axiom)), ())

    def test_schema_outside_language(self):
        with pytest.raises(HilbertSystemError, match="ill-formed"):
            HilbertSystem("bad", MINIMAL, (("A1", parse_formula("alpha -> alpha")),), ())

    def test_lookup(self):
        ipc = get_system("IPC")
        assert ipc.axiom("A4") == parse_formula("alpha & beta -> alpha")
        assert ipc.has_rule("MP")
        with pytest.raises(HilbertSystemError, match="no axiom"):
            ipc.axiom("A11")
        with pytest.raises(HilbertSystemError, match="no rule"):
            ipc.rule("HS")

    def test_restricted_system(self):
        minimal = get_system("minimal")
        restricted = minimal.restricted()
        assert restricted.name == "minimal-re"
        assert [r.name for r in restricted.rules] == ["R1'", "R2"]
        assert restricted.is_restricted
        assert not minimal.is_restricted

    def test_hipwk_is_restricted_ipc(self):
        hipwk = get_system("HIPWK")
        assert hipwk.axioms == get_system("IPC").axioms
        assert [r.name for r in hipwk.rules] == ["RMP"]

    def test_hprl_restricted_rules(self):
        names = [r.name for r in get_system("HPRL-re").rules]
        assert names == ["RMP", "RHS", "R3", "R4", "R5", "R6", "R7", "R8", "R9"]

    def test_empty_proof_has_no_conclusion(self):
        with pytest.raises(HilbertSystemError):
            Proof(()).conclusion
