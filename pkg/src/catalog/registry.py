"""
Catalog registry: look up built-in matrices, algebras and Hilbert systems by id.

Matrix ids may carry a "+w" suffix for the contaminating extension m ⊕ 1. The
resolve_* helpers also accept paths to matrix or system documents.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

from ..proofs.scripts import load_system
from ..proofs.system import HilbertSystem
from ..semantics.algebra import FiniteAlgebra, Matrix
from ..semantics.plonka import adjoin_contaminating
from ..semantics.storage import load_matrix
from .algebras import ALGEBRA_BUILDERS, MATRIX_BUILDERS
from .systems import SYSTEM_BUILDERS

logger = logging.getLogger(__name__)

OMEGA_SUFFIX = "+w"

Payload = Union[Matrix, FiniteAlgebra, HilbertSystem]


class CatalogError(KeyError):
    """Raised for unknown catalog ids."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog id"


class CatalogKind(Enum):
    SYSTEM = "system"
    MATRIX = "matrix"
    ALGEBRA = "algebra"


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named catalog object.

    Attributes:
        id: Lookup key
        kind: System, matrix or algebra
        payload: The object itself
        citation: What the entry transcribes
    """

    id: str
    kind: CatalogKind
    payload: Payload
    citation: str = ""


CITATIONS: Dict[str, str] = {
    "B2": "two-element Boolean matrix, designated {1}",
    "H3": "three-element Heyting chain, designated {1}",
    "M3": "RM3 truth tables, designated {1, 1/2}",
    "PS3": "LPS3 truth tables, designated {1, 1/2}",
    "prerough3": "smallest pre-rough algebra, printed tables, designated {1}",
    "prerough3-std": "three-element pre-rough algebra (Ia=0, Ca=1), designated {1}",
    "chain3": "three-element bounded chain",
    "diamond4": "four-element Boolean lattice",
    "minimal": "rules R1 (α∧β / α) and R2 (α / α∨β) over {∧, ∨}",
    "minimal-re": "restricted rules companion of the minimal system",
    "IPC": "axioms A1-A10 with MP",
    "HIPWK": "axioms A1-A10 with RMP",
    "HPRL": "axioms A1-A14 with rules R1-R9",
    "HPRL-re": "axioms A1-A14 with RMP, RHS and R3-R9",
    "RM3": "axioms A1-A15 with adjunction and MP",
    "LPS3": "axioms A1-A15 with adjunction and MP, ⊥ as ~(p0 -> p0)",
}


def _builder(entry_id: str) -> Callable[[], CatalogEntry]:
    if entry_id in SYSTEM_BUILDERS:
        return lambda: CatalogEntry(
            entry_id, CatalogKind.SYSTEM, SYSTEM_BUILDERS[entry_id](), CITATIONS[entry_id]
        )
    if entry_id in MATRIX_BUILDERS:
        return lambda: CatalogEntry(
            entry_id, CatalogKind.MATRIX, MATRIX_BUILDERS[entry_id](), CITATIONS[entry_id]
        )
    if entry_id in ALGEBRA_BUILDERS:
        return lambda: CatalogEntry(
            entry_id, CatalogKind.ALGEBRA, ALGEBRA_BUILDERS[entry_id](), CITATIONS[entry_id]
        )
    base = entry_id[: -len(OMEGA_SUFFIX)]
    if entry_id.endswith(OMEGA_SUFFIX) and base in MATRIX_BUILDERS:
        return lambda: CatalogEntry(
            entry_id,
            CatalogKind.MATRIX,
            adjoin_contaminating(get_matrix(base)),
            f"{CITATIONS[base]}, with a contaminating element adjoined",
        )
    raise CatalogError(f"Unknown catalog id '{entry_id}'. Known: {', '.join(catalog_ids())}")


@lru_cache(maxsize=None)
def catalog_get(entry_id: str) -> CatalogEntry:
    """
    Look up a catalog entry.

    Raises:
        CatalogError: If the id is unknown
    """
    entry = _builder(entry_id)()
    logger.debug(f"Built catalog entry {entry_id} ({entry.kind.value})")
    return entry


def catalog_ids(kind: Optional[CatalogKind] = None) -> List[str]:
    """Built-in ids, optionally of one kind; "+w" matrix ids are listed too."""
    ids: List[str] = []
    if kind in (None, CatalogKind.SYSTEM):
        ids.extend(SYSTEM_BUILDERS)
    if kind in (None, CatalogKind.MATRIX):
        ids.extend(MATRIX_BUILDERS)
        ids.extend(f"{m}{OMEGA_SUFFIX}" for m in MATRIX_BUILDERS)
    if kind in (None, CatalogKind.ALGEBRA):
        ids.extend(ALGEBRA_BUILDERS)
    return ids


def _typed(entry_id: str, kind: CatalogKind) -> Payload:
    entry = catalog_get(entry_id)
    if entry.kind is not kind:
        raise CatalogError(f"'{entry_id}' is a {entry.kind.value}, not a {kind.value}")
    return entry.payload


def get_matrix(entry_id: str) -> Matrix:
    payload = _typed(entry_id, CatalogKind.MATRIX)
    assert isinstance(payload, Matrix)
    return payload


def get_system(entry_id: str) -> HilbertSystem:
    payload = _typed(entry_id, CatalogKind.SYSTEM)
    assert isinstance(payload, HilbertSystem)
    return payload


def get_algebra(entry_id: str) -> FiniteAlgebra:
    """An algebra entry, or the algebra of a matrix entry."""
    entry = catalog_get(entry_id)
    if isinstance(entry.payload, Matrix):
        return entry.payload.algebra
    if isinstance(entry.payload, FiniteAlgebra):
        return entry.payload
    raise CatalogError(f"'{entry_id}' is a {entry.kind.value}, not an algebra")


def resolve_matrix(reference: str) -> Matrix:
    """A catalog matrix id or the path of a matrix document."""
    path = Path(reference)
    if path.suffix == ".json" or path.is_file():
        return load_matrix(path)
    return get_matrix(reference)


def resolve_system(reference: str) -> HilbertSystem:
    """A catalog system id or the path of a system document."""
    path = Path(reference)
    if path.suffix == ".json" or path.is_file():
        return load_system(path)
    return get_system(reference)
