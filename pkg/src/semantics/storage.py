"""
Matrix and directed-system documents.

Documents are JSON files validated with pydantic and written with orjson
(2-space indent, trailing newline). Writing a loaded document reproduces the
original bytes whenever that document was itself produced by these writers.
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import orjson
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..syntax.formula import Language, Operator
from .algebra import AlgebraError, FiniteAlgebra, Matrix
from .plonka import (
    DirectedSystemOfAlgebras,
    DirectedSystemOfMatrices,
    SemilatticeIndex,
)

logger = logging.getLogger(__name__)


class DocumentError(ValueError):
    """Raised when a document cannot be decoded or validated."""

    pass


class OperatorSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    symbol: str = Field(min_length=1)
    arity: int = Field(ge=0)


class AlgebraDocument(BaseModel):
    """An algebra, or a matrix when `designated` is present."""

    model_config = ConfigDict(extra="forbid")

    name: str = ""
    language: List[OperatorSpec]
    universe: List[str] = Field(min_length=1)
    tables: Dict[str, Any]
    designated: Optional[List[str]] = None

    @field_validator("universe")
    @classmethod
    def validate_universe(cls, v: List[str]) -> List[str]:
        if len(set(v)) != len(v):
            raise ValueError(f"universe labels must be distinct: {v}")
        return v


class HomomorphismDocument(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    source: str
    target: str
    mapping: Dict[str, str] = Field(alias="map")


class DirectedSystemDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    index: List[str] = Field(min_length=1)
    join: List[List[str]]
    members: Dict[str, AlgebraDocument]
    homomorphisms: List[HomomorphismDocument] = Field(default_factory=list)


def language_to_specs(lang: Language) -> List[OperatorSpec]:
    return [OperatorSpec(symbol=op.symbol, arity=op.arity) for op in lang.operators]


def specs_to_language(specs: List[OperatorSpec]) -> Language:
    return Language(tuple(Operator(s.symbol, s.arity) for s in specs))


def algebra_to_document(
    algebra: FiniteAlgebra, designated: Optional[frozenset] = None, name: str = ""
) -> AlgebraDocument:
    return AlgebraDocument(
        name=name or algebra.name,
        language=language_to_specs(algebra.language),
        universe=list(algebra.universe),
        tables={s: algebra.nested_table(s) for s in algebra.language.symbols},
        designated=None
        if designated is None
        else [a for a in algebra.universe if a in designated],
    )


def matrix_to_document(m: Matrix) -> AlgebraDocument:
    return algebra_to_document(m.algebra, m.designated, m.name)


def document_to_algebra(doc: AlgebraDocument) -> FiniteAlgebra:
    try:
        return FiniteAlgebra.from_tables(
            specs_to_language(doc.language), doc.universe, doc.tables, doc.name, allow_omega=True
        )
    except (AlgebraError, ValueError) as e:
        raise DocumentError(f"Invalid algebra document '{doc.name}': {e}") from e


def document_to_matrix(doc: AlgebraDocument) -> Matrix:
    if doc.designated is None:
        raise DocumentError(f"Document '{doc.name}' has no designated set")
    algebra = document_to_algebra(doc)
    try:
        return Matrix(algebra, frozenset(doc.designated), doc.name)
    except AlgebraError as e:
        raise DocumentError(f"Invalid matrix document '{doc.name}': {e}") from e


def dump_document(doc: BaseModel) -> bytes:
    return orjson.dumps(doc.model_dump(by_alias=True, exclude_none=True), option=orjson.OPT_INDENT_2) + b"\n"


def _decode(data: Union[bytes, str], model: type, source: str) -> Any:
    try:
        raw = orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise DocumentError(f"{source}: invalid JSON: {e}") from e
    try:
        return model.model_validate(raw)
    except ValidationError as e:
        raise DocumentError(f"{source}: {e}") from e


def load_algebra_document(data: Union[bytes, str], source: str = "<document>") -> AlgebraDocument:
    return _decode(data, AlgebraDocument, source)


def matrix_to_bytes(m: Matrix) -> bytes:
    return dump_document(matrix_to_document(m))


def matrix_from_bytes(data: Union[bytes, str], source: str = "<document>") -> Matrix:
    return document_to_matrix(load_algebra_document(data, source))


def load_matrix(path: Path) -> Matrix:
    """Load a matrix document from disk."""
    matrix = matrix_from_bytes(Path(path).read_bytes(), str(path))
    logger.info(f"Loaded matrix {matrix.name} from {path}")
    return matrix


def save_matrix(m: Matrix, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(matrix_to_bytes(m))
    logger.debug(f"Saved matrix {m.name} to {path}")


def directed_system_to_document(
    system: Union[DirectedSystemOfAlgebras, DirectedSystemOfMatrices],
) -> DirectedSystemDocument:
    if isinstance(system, DirectedSystemOfMatrices):
        members = {i: matrix_to_document(system.matrices[i]) for i in system.index.elements}
    else:
        members = {i: algebra_to_document(system.algebras[i]) for i in system.index.elements}
    homs = [
        HomomorphismDocument(source=i, target=j, mapping=dict(f))
        for (i, j), f in sorted(system.homs.items())
    ]
    return DirectedSystemDocument(
        name=system.name,
        index=list(system.index.elements),
        join=system.index.rows(),
        members=members,
        homomorphisms=homs,
    )


def document_to_directed_system(
    doc: DirectedSystemDocument,
) -> Union[DirectedSystemOfAlgebras, DirectedSystemOfMatrices]:
    """Matrices when every member has a designated set, algebras otherwise."""
    if len(doc.join) != len(doc.index) or any(len(row) != len(doc.index) for row in doc.join):
        raise DocumentError(f"Join table of '{doc.name}' is not {len(doc.index)}x{len(doc.index)}")
    index = SemilatticeIndex.from_rows(doc.index, doc.join)
    homs = {(h.source, h.target): dict(h.mapping) for h in doc.homomorphisms}
    if all(m.designated is not None for m in doc.members.values()):
        matrices = {i: document_to_matrix(m) for i, m in doc.members.items()}
        return DirectedSystemOfMatrices(index, matrices, homs, doc.name)
    algebras = {i: document_to_algebra(m) for i, m in doc.members.items()}
    return DirectedSystemOfAlgebras(index, algebras, homs, doc.name)


def load_directed_system(path: Path) -> Union[DirectedSystemOfAlgebras, DirectedSystemOfMatrices]:
    doc = _decode(Path(path).read_bytes(), DirectedSystemDocument, str(path))
    system = document_to_directed_system(doc)
    logger.info(f"Loaded directed system {doc.name or path} with {len(doc.index)} indices")
    return system


def save_directed_system(
    system: Union[DirectedSystemOfAlgebras, DirectedSystemOfMatrices], path: Path
) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dump_document(directed_system_to_document(system)))
