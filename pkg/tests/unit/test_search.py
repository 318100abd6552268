"""Unit tests for bounded proof search."""

import pytest

from src.catalog import get_system
from src.proofs.checker import check_proof
from src.proofs.search import ProofSearch, candidate_pool, derive_bounded
from src.syntax.parser import parse_formula
from src.utils.config import SearchLimits


class TestCandidatePool:
    """Test cases for candidate_pool."""

    def test_subformulas_in_order(self):
        pool = candidate_pool([parse_formula("p & q"), parse_formula("p | q")], 5)
        assert [f.text for f in pool] == ["p", "q", "(p & q)", "(p | q)"]

    def test_size_cap(self):
        pool = candidate_pool([parse_formula("p -> (q -> p)")], 3)
        assert [f.text for f in pool] == ["p", "q", "(q -> p)"]


class TestDeriveBounded:
    """Test cases for derive_bounded and ProofSearch."""

    def test_minimal_separation(self):
        minimal = get_system("minimal")
        proof = derive_bounded([parse_formula("p & q")], parse_formula("p | q"), minimal)
        assert proof is not None
        assert proof.conclusion == parse_formula("p | q")
        assert check_proof(proof, minimal).is_valid

    def test_restricted_minimal_cannot_separate(self):
        proof = derive_bounded(
            [parse_formula("p & q")],
            parse_formula("p | q"),
            get_system("minimal-re"),
            SearchLimits(depth=4, max_formula_size=7),
        )
        assert proof is None

    def test_hypothesis_is_its_own_proof(self):
        proof = derive_bounded([parse_formula("p")], parse_formula("p"), get_system("minimal"))
        assert proof is not None
        assert len(proof) == 1

    def test_hprl_identity_by_syllogism(self):
        hprl = get_system("HPRL")
        proof = derive_bounded([], parse_formula("p -> p"), hprl, SearchLimits(depth=1))
        assert proof is not None
        assert proof.lines[-1].justification.describe() == "HS 1 2"
        assert check_proof(proof, hprl).is_valid

    def test_ipc_identity(self):
        ipc = get_system("IPC")
        proof = derive_bounded([], parse_formula("p -> p"), ipc, SearchLimits(3, 17))
        assert proof is not None
        assert proof.hypotheses == frozenset()
        assert check_proof(proof, ipc).is_valid

    def test_depth_zero_uses_axioms_only(self):
        ipc = get_system("IPC")
        assert derive_bounded([], parse_formula("p -> (q -> p)"), ipc, SearchLimits(0, 5))
        assert derive_bounded([], parse_formula("p -> p"), ipc, SearchLimits(0, 17)) is None

    def test_capped_flag(self):
        search = ProofSearch(get_system("IPC"), SearchLimits(depth=1, max_formula_size=3))
        assert search.derive([], parse_formula("p -> p")) is None
        assert search.capped

    def test_deterministic(self):
        minimal = get_system("minimal")
        hyps, goal = [parse_formula("p & q")], parse_formula("p | (p & q)")
        assert derive_bounded(hyps, goal, minimal) == derive_bounded(hyps, goal, minimal)


class TestTheoremSetAgreement:
    """A system and its restricted form prove the same goals from no hypotheses."""

    @pytest.mark.parametrize(
        "system_id, goal, limits, provable",
        [
            ("minimal", "p | q", SearchLimits(3, 7), False),
            ("minimal", "p", SearchLimits(3, 7), False),
            ("IPC", "p -> (q -> p)", SearchLimits(0, 7), True),
            ("IPC", "(p & q) -> p", SearchLimits(0, 7), True),
            ("IPC", "p -> (p | q)", SearchLimits(0, 7), True),
            ("IPC", "0 -> p", SearchLimits(0, 7), True),
            ("IPC", "p -> p", SearchLimits(3, 17), True),
            ("IPC", "p -> q", SearchLimits(2, 7), False),
            ("HPRL", "p -> p", SearchLimits(1, 12), True),
            ("RM3", "p -> p", SearchLimits(0, 7), True),
            ("LPS3", "p -> (q -> p)", SearchLimits(0, 7), True),
        ],
    )
    def test_restricted_system_agrees(self, system_id, goal, limits, provable):
        system = get_system(system_id)
        restricted = system.restricted()
        formula = parse_formula(goal, system.language)
        deeper = SearchLimits(limits.depth + 1, limits.max_formula_size)

        found = derive_bounded([], formula, system, limits)
        found_restricted = derive_bounded([], formula, restricted, deeper)

        assert (found is not None) == provable
        assert (found_restricted is not None) == provable
        if found_restricted is not None:
            assert check_proof(found_restricted, restricted).is_valid
