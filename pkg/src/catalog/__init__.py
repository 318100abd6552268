"""
Catalog Package

Built-in matrices, algebras and Hilbert systems, paraconsistency and
deduction-theorem probes, and the reproduction suite.

Modules:
- algebras: B2, H3, M3, PS3, the pre-rough matrices and two lattices
- systems: minimal, IPC, HIPWK, HPRL, RM3 and LPS3 presentations
- registry: Lookup by id, "+w" extensions, file-or-id resolution
- probes: ECQ/LNC probes, paraconsistency classes, deduction-theorem reports
- repro: Named checks reproducing the catalog's stated facts

Example Usage:
    from src.catalog import classify_paraconsistency, get_matrix

    print(classify_paraconsistency(get_matrix("B2+w")).value)   # weakly paraconsistent
"""

from .algebras import DECLARED_CLASSES, MATRIX_BUILDERS
from .probes import (
    DeductionInstance,
    DeductionReport,
    DeductionRow,
    NonCompanionWitness,
    Paraconsistency,
    TransferViolation,
    classify_paraconsistency,
    deduction_instance,
    deduction_transfer_violations,
    enumerate_deduction_instances,
    non_companion_witness,
    predict_companion_class,
    probe_deduction,
    probe_ecq,
    probe_land_ecq,
    probe_lnc,
    rm3_non_companion_witness,
)
from .registry import (
    CatalogEntry,
    CatalogError,
    CatalogKind,
    catalog_get,
    catalog_ids,
    get_algebra,
    get_matrix,
    get_system,
    resolve_matrix,
    resolve_system,
)
from .repro import ReproCheck, ReproReport, ReproSettings, run_repro
from .systems import SOUNDNESS_FACTS, SYSTEM_BUILDERS

__all__ = [
    "DECLARED_CLASSES",
    "MATRIX_BUILDERS",
    "DeductionInstance",
    "DeductionReport",
    "DeductionRow",
    "NonCompanionWitness",
    "Paraconsistency",
    "TransferViolation",
    "classify_paraconsistency",
    "deduction_instance",
    "deduction_transfer_violations",
    "enumerate_deduction_instances",
    "non_companion_witness",
    "predict_companion_class",
    "probe_deduction",
    "probe_ecq",
    "probe_land_ecq",
    "probe_lnc",
    "rm3_non_companion_witness",
    "CatalogEntry",
    "CatalogError",
    "CatalogKind",
    "catalog_get",
    "catalog_ids",
    "get_algebra",
    "get_matrix",
    "get_system",
    "resolve_matrix",
    "resolve_system",
    "ReproCheck",
    "ReproReport",
    "ReproSettings",
    "run_repro",
    "SOUNDNESS_FACTS",
    "SYSTEM_BUILDERS",
]
