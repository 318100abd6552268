"""Unit tests for proof scripts and system documents."""

from pathlib import Path

import orjson
import pytest

from src.catalog import get_system
from src.proofs.scripts import (
    ProofScriptError,
    format_proof,
    load_proof,
    load_system,
    parse_proof_script,
    save_system,
    system_from_bytes,
    system_to_bytes,
)
from src.proofs.system import AxiomInstance, Hypothesis, RuleApplication
from src.semantics.storage import DocumentError
from src.syntax.formula import var

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


class TestParseProofScript:
    """Test cases for parse_proof_script."""

    def test_justifications(self):
        proof = parse_proof_script(
            "# comment\n"
            "\n"
            "1. p & q ; hyp\n"
            "2. p -> (q -> p) ; ax A1 [alpha=p, beta=q]\n"
            "3. p ; R1 1\n"
        )
        assert len(proof) == 3
        assert isinstance(proof.lines[0].justification, Hypothesis)
        axiom = proof.lines[1].justification
        assert isinstance(axiom, AxiomInstance)
        assert axiom.substitution is not None
        assert axiom.substitution["beta"] == var("q")
        assert proof.lines[2].justification == RuleApplication("R1", (1,))
        assert proof.hypotheses == frozenset({proof.lines[0].formula})

    def test_axiom_without_bindings(self):
        proof = parse_proof_script("1. p -> (q -> p) ; ax A1")
        assert proof.lines[0].justification == AxiomInstance("A1", None)

    @pytest.mark.parametrize(
        "script,line,fragment",
        [
            ("1 p ; hyp", 1, "expected '<n>."),
            ("# header\n2. p ; hyp", 2, "expected line number 1"),
            ("1. p & ; hyp", 1, ""),
            ("1. p ; ax A1 [alpha]", 1, "bad binding"),
            ("1. p ; ax A1 [alpha=p &]", 1, "bad formula in binding"),
            ("1. p ; hyp\n2. p ; R1", 2, "cites no premise"),
            ("1. p ; hyp\n2. p ; R1 one", 2, "bad justification"),
            ("# nothing here\n", 1, "no proof lines"),
        ],
    )
    def test_errors(self, script, line, fragment):
        with pytest.raises(ProofScriptError) as excinfo:
            parse_proof_script(script)
        assert excinfo.value.line == line
        assert fragment in str(excinfo.value)


class TestFormatProof:
    """Test cases for format_proof."""

    def test_corpus_derivation(self):
        proof = load_proof(CORPUS / "derivations" / "minimal_separation.proof")
        assert format_proof(proof) == "1. (p & q) ; hyp\n2. p ; R1 1\n3. (p | q) ; R2 2\n"

    def test_bindings_are_written(self):
        proof = parse_proof_script("1. p -> (q -> p) ; ax A1 [beta=q, alpha=p]")
        assert format_proof(proof) == "1. (p -> (q -> p)) ; ax A1 [alpha=p, beta=q]\n"

    def test_numbers_are_right_aligned(self):
        proof = load_proof(CORPUS / "proofs" / "IPC" / "08_contraction.proof")
        rendered = format_proof(proof).splitlines()
        assert len(rendered) == 11
        assert rendered[0].startswith(" 1. ")
        assert rendered[10].startswith("11. ")

    def test_reparses(self):
        proof = load_proof(CORPUS / "proofs" / "HPRL" / "05_identity_through_conjunction.proof")
        assert parse_proof_script(format_proof(proof)) == proof


class TestSystemDocuments:
    """Test cases for Hilbert system documents."""

    def test_corpus_minimal_matches_catalog(self):
        assert load_system(CORPUS / "systems" / "minimal.json") == get_system("minimal")

    @pytest.mark.parametrize("system_id", ["IPC", "HPRL", "HPRL-re", "LPS3", "minimal-re"])
    def test_bytes_round_trip(self, system_id):
        system = get_system(system_id)
        assert system_from_bytes(system_to_bytes(system)) == system

    def test_restricted_form_is_written(self):
        payload = orjson.loads(system_to_bytes(get_system("HPRL")))
        hs = next(r for r in payload["rules"] if r["name"] == "HS")
        assert hs["restrict"] is False
        assert hs["restricted_name"] == "RHS"
        assert hs["restricted_form"] == {"sources": ["beta"], "targets": ["alpha", "gamma"]}

    def test_standard_restriction_is_a_flag(self):
        payload = orjson.loads(system_to_bytes(get_system("minimal-re")))
        assert [r["restrict"] for r in payload["rules"]] == [True, False]

    def test_save_and_load(self, tmp_path):
        path = tmp_path / "systems" / "rm3.json"
        save_system(get_system("RM3"), path)
        assert load_system(path) == get_system("RM3")

    def test_invalid_json(self):
        with pytest.raises(DocumentError, match="invalid JSON"):
            system_from_bytes(b"{")

    def test_schema_outside_language(self):
        payload = orjson.loads(system_to_bytes(get_system("minimal")))
        payload["axioms"] = {"A1": "alpha -> alpha"}
        with pytest.raises(DocumentError, match="Invalid system document"):
            system_from_bytes(orjson.dumps(payload))

    def test_unknown_field(self):
        payload = orjson.loads(system_to_bytes(get_system("minimal")))
        payload["rules"][0]["priority"] = 1
        with pytest.raises(DocumentError):
            system_from_bytes(orjson.dumps(payload))
