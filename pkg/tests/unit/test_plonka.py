"""Unit tests for directed systems, Płonka sums and the contaminating element."""

from pathlib import Path

import pytest

from src.catalog.algebras import boolean_two, heyting_three
from src.semantics.algebra import OMEGA, AlgebraError, Matrix, consequence
from src.semantics.plonka import (
    DirectedSystemError,
    DirectedSystemOfAlgebras,
    DirectedSystemOfMatrices,
    SemilatticeIndex,
    adjoin_contaminating,
    contamination_system,
    plonka_sum_algebras,
    plonka_sum_matrices,
    validate_directed_system,
)
from src.semantics.storage import load_directed_system
from src.syntax.parser import parse_formula

MATRICES = Path(__file__).resolve().parents[2] / "corpus" / "matrices"


@pytest.fixture
def b2():
    return boolean_two()


class TestSemilatticeIndex:
    """Test cases for the index semilattice."""

    def test_chain(self):
        index = SemilatticeIndex.chain(("i", "j", "k"))
        assert index.le("i", "k")
        assert not index.le("k", "j")
        assert index.bottom() == "i"
        assert index.join_of(["j", "i"]) == "j"
        assert index.violations() == []

    def test_empty_index(self):
        index = SemilatticeIndex((), {})
        assert [str(v) for v in index.violations()] == ["[semilattice] index is empty"]
        system = DirectedSystemOfAlgebras(index, {})
        assert [v.kind for v in validate_directed_system(system)] == ["semilattice"]

    def test_non_commutative_join(self):
        index = SemilatticeIndex.from_rows(("i", "j"), [["i", "i"], ["j", "j"]])
        assert any("commutative" in v.message for v in index.violations())

    def test_join_outside_index(self):
        index = SemilatticeIndex.from_rows(("i", "j"), [["i", "x"], ["x", "j"]])
        assert [v.kind for v in index.violations()] == ["semilattice", "semilattice"]


class TestValidation:
    """Test cases for validate_directed_system."""

    def test_corpus_system_is_valid(self):
        system = load_directed_system(MATRICES / "H3_over_B2.system.json")
        assert isinstance(system, DirectedSystemOfMatrices)
        assert validate_directed_system(system) == []

    def test_corpus_broken_system(self):
        system = load_directed_system(MATRICES / "H3_over_B2_broken.system.json")
        violations = validate_directed_system(system)
        assert violations
        assert violations[0].kind == "homomorphism"

    def test_missing_homomorphism(self, b2):
        system = DirectedSystemOfAlgebras(
            SemilatticeIndex.chain(("i", "j")), {"i": heyting_three().algebra, "j": b2.algebra}
        )
        assert [v.kind for v in validate_directed_system(system)] == ["missing"]

    def test_members_must_match_index(self, b2):
        system = DirectedSystemOfAlgebras(SemilatticeIndex.chain(("i", "j")), {"i": b2.algebra})
        assert [v.kind for v in validate_directed_system(system)] == ["members"]

    def test_designation_must_be_preserved(self, b2):
        system = DirectedSystemOfMatrices(
            SemilatticeIndex.chain(("i", "j")),
            {"i": b2, "j": Matrix(b2.algebra, frozenset({"0"}))},
            {("i", "j"): {"0": "0", "1": "1"}},
        )
        violations = validate_directed_system(system)
        assert [v.kind for v in violations] == ["designated"]
        assert str(violations[0]).startswith("[designated]")

    def test_non_identity_self_map(self, b2):
        system = DirectedSystemOfAlgebras(
            SemilatticeIndex.chain(("i",)), {"i": b2.algebra}, {("i", "i"): {"0": "1", "1": "0"}}
        )
        kinds = {v.kind for v in validate_directed_system(system)}
        assert "identity" in kinds


class TestPlonkaSum:
    """Test cases for summing directed systems."""

    def test_sum_of_corpus_system(self):
        system = load_directed_system(MATRICES / "H3_over_B2.system.json")
        summed = plonka_sum_matrices(system)
        algebra = summed.algebra
        assert algebra.universe == ("i:0", "i:a", "i:1", "j:0", "j:1")
        assert summed.designated == frozenset({"i:1", "j:1"})
        assert algebra.operate("&", "i:a", "j:0") == "j:0"
        assert algebra.operate("->", "i:a", "i:0") == "i:0"
        assert algebra.operate("~", "j:1") == "j:0"
        assert algebra.operate("0") == "i:0"

    def test_invalid_system_is_rejected(self):
        system = load_directed_system(MATRICES / "H3_over_B2_broken.system.json")
        assert isinstance(system, DirectedSystemOfMatrices)
        with pytest.raises(DirectedSystemError, match="Invalid directed system"):
            plonka_sum_algebras(system.algebra_system())


class TestContamination:
    """Test cases for adjoining the contaminating element."""

    def test_adjoin(self, b2):
        extended = adjoin_contaminating(b2)
        assert extended.name == "B2+w"
        assert extended.algebra.universe == ("0", "1", OMEGA)
        assert extended.designated == frozenset({"1", OMEGA})
        assert extended.algebra.operate("&", OMEGA, "0") == OMEGA
        assert extended.algebra.operate("~", "1") == "0"
        assert extended.algebra.operate("0") == "0"

    def test_matches_two_index_plonka_sum(self, b2):
        assert plonka_sum_matrices(contamination_system(b2)) == adjoin_contaminating(b2)

    def test_reserved_label_already_used(self, b2):
        with pytest.raises(AlgebraError, match="reserved"):
            adjoin_contaminating(adjoin_contaminating(b2))

    def test_explosion_fails_with_omega(self, b2):
        explosion = ([parse_formula("p"), parse_formula("~p")], parse_formula("q"))
        assert consequence(*explosion, [b2])
        assert not consequence(*explosion, [adjoin_contaminating(b2)])
