"""
Proofs Package

Hilbert systems with variable-inclusion side conditions, proof checking,
bounded proof search, proof transformations and soundness checks.

Modules:
- system: Rule, VariableInclusion, HilbertSystem, Proof and justifications
- checker: check_proof returning a ProofCheck result
- search: derive_bounded forward saturation search
- transforms: translate_theorem_proof, prune_derivation, extract_delta
- scripts: Proof script and system document reading/writing
- soundness: is_model / soundness_violations for a matrix

Example Usage:
    from src.catalog import get_system
    from src.proofs import check_proof, derive_bounded
    from src.syntax import parse_formula

    minimal = get_system("minimal")
    proof = derive_bounded([parse_formula("p & q")], parse_formula("p | q"), minimal)
    print(check_proof(proof, minimal).is_valid)   # True
"""

from .checker import ProofCheck, axiom_substitution, check_proof
from .scripts import (
    InclusionDocument,
    ProofScriptError,
    RuleDocument,
    SystemDocument,
    document_to_system,
    format_proof,
    load_proof,
    load_system,
    parse_proof_script,
    save_system,
    system_from_bytes,
    system_to_bytes,
    system_to_document,
)
from .search import ProofSearch, candidate_pool, derive_bounded
from .soundness import instance_pool, is_model, soundness_violations
from .system import (
    RESTRICTED_NAMES,
    AxiomInstance,
    HilbertSystem,
    HilbertSystemError,
    Hypothesis,
    Justification,
    Proof,
    ProofLine,
    Rule,
    RuleApplication,
    VariableInclusion,
)
from .transforms import (
    TranslationError,
    collapse_substitution,
    extract_delta,
    prune_derivation,
    translate_theorem_proof,
)

__all__ = [
    "ProofCheck",
    "axiom_substitution",
    "check_proof",
    "InclusionDocument",
    "ProofScriptError",
    "RuleDocument",
    "SystemDocument",
    "document_to_system",
    "format_proof",
    "load_proof",
    "load_system",
    "parse_proof_script",
    "save_system",
    "system_from_bytes",
    "system_to_bytes",
    "system_to_document",
    "ProofSearch",
    "candidate_pool",
    "derive_bounded",
    "instance_pool",
    "is_model",
    "soundness_violations",
    "RESTRICTED_NAMES",
    "AxiomInstance",
    "HilbertSystem",
    "HilbertSystemError",
    "Hypothesis",
    "Justification",
    "Proof",
    "ProofLine",
    "Rule",
    "RuleApplication",
    "VariableInclusion",
    "TranslationError",
    "collapse_substitution",
    "extract_delta",
    "prune_derivation",
    "translate_theorem_proof",
]
