"""
Semantics Package

Finite algebras, logical matrices, algebra classes, Płonka sums and the JSON
documents they are stored in.

Modules:
- algebra: FiniteAlgebra, Matrix, evaluation and matrix-defined consequence
- classes: Class predicates with violation witnesses, small-algebra enumeration
- plonka: Directed systems, Płonka sums and the contaminating-element extension
- storage: Matrix and directed-system documents (pydantic + orjson)

Example Usage:
    from src.catalog import get_matrix
    from src.semantics import adjoin_contaminating, consequence
    from src.syntax import parse_formula

    pwk = adjoin_contaminating(get_matrix("B2"))
    p, not_p, q = (parse_formula(t) for t in ("p", "~p", "q"))
    print(consequence([p, not_p], q, [pwk]))   # False
"""

from .algebra import (
    OMEGA,
    AlgebraError,
    Countermodel,
    EvaluationError,
    FiniteAlgebra,
    Matrix,
    Valuation,
    ValuationGrid,
    consequence,
    evaluate,
    find_countermodel,
    homomorphism_witness,
    is_homomorphism,
    is_tautology,
    trivial_algebra,
    trivial_matrix,
    truth_table,
)
from .classes import (
    CLASS_LANGUAGES,
    CLASS_PREDICATES,
    MAX_ENUMERATION_SIZE,
    EnumerationError,
    MissingOperatorError,
    are_isomorphic,
    boolean_violations,
    bounds,
    canonical_form,
    enumerate_algebras,
    heyting_violations,
    is_boolean,
    is_bounded_distributive_lattice,
    is_heyting,
    is_pre_rough,
    is_quasi_boolean,
    lattice_violations,
    normalize_class_name,
    pre_rough_violations,
    quasi_boolean_violations,
)
from .plonka import (
    DirectedSystem,
    DirectedSystemError,
    DirectedSystemOfAlgebras,
    DirectedSystemOfMatrices,
    SemilatticeIndex,
    Violation,
    adjoin_contaminating,
    contamination_system,
    plonka_sum_algebras,
    plonka_sum_matrices,
    validate_directed_system,
)
from .storage import (
    AlgebraDocument,
    DirectedSystemDocument,
    DocumentError,
    HomomorphismDocument,
    OperatorSpec,
    algebra_to_document,
    document_to_algebra,
    document_to_directed_system,
    document_to_matrix,
    dump_document,
    load_algebra_document,
    load_directed_system,
    load_matrix,
    matrix_from_bytes,
    matrix_to_bytes,
    matrix_to_document,
    save_directed_system,
    save_matrix,
)

__all__ = [
    "OMEGA",
    "AlgebraError",
    "Countermodel",
    "EvaluationError",
    "FiniteAlgebra",
    "Matrix",
    "Valuation",
    "ValuationGrid",
    "consequence",
    "evaluate",
    "find_countermodel",
    "homomorphism_witness",
    "is_homomorphism",
    "is_tautology",
    "trivial_algebra",
    "trivial_matrix",
    "truth_table",
    "CLASS_LANGUAGES",
    "CLASS_PREDICATES",
    "MAX_ENUMERATION_SIZE",
    "EnumerationError",
    "MissingOperatorError",
    "are_isomorphic",
    "boolean_violations",
    "bounds",
    "canonical_form",
    "enumerate_algebras",
    "heyting_violations",
    "is_boolean",
    "is_bounded_distributive_lattice",
    "is_heyting",
    "is_pre_rough",
    "is_quasi_boolean",
    "lattice_violations",
    "normalize_class_name",
    "pre_rough_violations",
    "quasi_boolean_violations",
    "DirectedSystem",
    "DirectedSystemError",
    "DirectedSystemOfAlgebras",
    "DirectedSystemOfMatrices",
    "SemilatticeIndex",
    "Violation",
    "adjoin_contaminating",
    "contamination_system",
    "plonka_sum_algebras",
    "plonka_sum_matrices",
    "validate_directed_system",
    "AlgebraDocument",
    "DirectedSystemDocument",
    "DocumentError",
    "HomomorphismDocument",
    "OperatorSpec",
    "algebra_to_document",
    "document_to_algebra",
    "document_to_directed_system",
    "document_to_matrix",
    "dump_document",
    "load_algebra_document",
    "load_directed_system",
    "load_matrix",
    "matrix_from_bytes",
    "matrix_to_bytes",
    "matrix_to_document",
    "save_directed_system",
    "save_matrix",
]
