"""Unit tests for matrix and directed-system documents."""

from pathlib import Path

import orjson
import pytest

from src.catalog.algebras import heyting_three, rm3_matrix
from src.semantics.algebra import OMEGA
from src.semantics.plonka import adjoin_contaminating, validate_directed_system
from src.semantics.storage import (
    DocumentError,
    directed_system_to_document,
    dump_document,
    load_directed_system,
    load_matrix,
    matrix_from_bytes,
    matrix_to_bytes,
    matrix_to_document,
    save_directed_system,
    save_matrix,
)

MATRICES = Path(__file__).resolve().parents[2] / "corpus" / "matrices"


class TestMatrixDocuments:
    """Test cases for matrix documents."""

    def test_corpus_documents_match_catalog(self):
        assert load_matrix(MATRICES / "M3.json") == rm3_matrix()
        assert load_matrix(MATRICES / "H3.json") == heyting_three()

    def test_bytes_are_stable(self, tmp_path):
        path = tmp_path / "nested" / "m3.json"
        save_matrix(rm3_matrix(), path)
        written = path.read_bytes()
        assert written.endswith(b"\n")
        assert matrix_to_bytes(load_matrix(path)) == written

    @pytest.mark.parametrize(
        "path", sorted(MATRICES.glob("*.json")), ids=lambda p: p.name
    )
    def test_corpus_documents_rewrite_identically(self, path):
        if path.name.endswith(".system.json"):
            written = dump_document(directed_system_to_document(load_directed_system(path)))
        else:
            written = matrix_to_bytes(load_matrix(path))
        assert written == path.read_bytes()

    def test_designated_in_universe_order(self):
        doc = matrix_to_document(rm3_matrix())
        assert doc.designated == ["1", "1/2"]

    def test_contaminated_matrix_round_trip(self):
        extended = adjoin_contaminating(heyting_three())
        restored = matrix_from_bytes(matrix_to_bytes(extended))
        assert restored == extended
        assert OMEGA in restored.designated

    def test_invalid_json(self):
        with pytest.raises(DocumentError, match="invalid JSON"):
            matrix_from_bytes(b"{not json")

    def test_unknown_field(self):
        raw = orjson.loads(matrix_to_bytes(rm3_matrix()))
        raw["colour"] = "blue"
        with pytest.raises(DocumentError):
            matrix_from_bytes(orjson.dumps(raw))

    def test_duplicate_universe_labels(self):
        raw = orjson.loads(matrix_to_bytes(rm3_matrix()))
        raw["universe"] = ["1", "1", "0"]
        with pytest.raises(DocumentError, match="distinct"):
            matrix_from_bytes(orjson.dumps(raw))

    def test_partial_table(self):
        raw = orjson.loads(matrix_to_bytes(rm3_matrix()))
        raw["tables"]["~"] = ["0", "1"]
        with pytest.raises(DocumentError, match="Invalid algebra document"):
            matrix_from_bytes(orjson.dumps(raw))

    def test_missing_designated_set(self):
        raw = orjson.loads(matrix_to_bytes(rm3_matrix()))
        del raw["designated"]
        with pytest.raises(DocumentError, match="no designated set"):
            matrix_from_bytes(orjson.dumps(raw))

    def test_designated_outside_universe(self):
        raw = orjson.loads(matrix_to_bytes(rm3_matrix()))
        raw["designated"] = ["2"]
        with pytest.raises(DocumentError, match="Invalid matrix document"):
            matrix_from_bytes(orjson.dumps(raw))


class TestDirectedSystemDocuments:
    """Test cases for directed-system documents."""

    def test_round_trip(self, tmp_path):
        system = load_directed_system(MATRICES / "H3_over_B2.system.json")
        path = tmp_path / "system.json"
        save_directed_system(system, path)
        restored = load_directed_system(path)
        assert validate_directed_system(restored) == []
        assert restored.homs == {("i", "j"): {"0": "0", "a": "1", "1": "1"}}
        save_directed_system(restored, tmp_path / "again.json")
        assert (tmp_path / "again.json").read_bytes() == path.read_bytes()

    def test_join_table_shape(self, tmp_path):
        raw = orjson.loads((MATRICES / "H3_over_B2.system.json").read_bytes())
        raw["join"] = [["i", "j"]]
        path = tmp_path / "bad.json"
        path.write_bytes(orjson.dumps(raw))
        with pytest.raises(DocumentError, match="Join table"):
            load_directed_system(path)

    def test_dump_document_indents(self):
        text = dump_document(matrix_to_document(rm3_matrix())).decode()
        assert text.startswith('{\n  "name": "M3"')
