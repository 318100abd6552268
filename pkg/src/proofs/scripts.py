"""
Proof scripts and Hilbert-system documents.

Proof script lines have the form

    <n>. <formula> ; <justification>

where the justification is `hyp`, `ax <name> [meta=formula, ...]` (bindings
optional) or `<rule> <i> <j> ...`. Lines starting with `#` and blank lines are
ignored; line numbers must run 1, 2, 3, ...

System documents are JSON (pydantic + orjson) listing the language, named axiom
schemas and rules with optional `restrict` annotations.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import orjson
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..semantics.storage import (
    DocumentError,
    OperatorSpec,
    language_to_specs,
    specs_to_language,
)
from ..syntax.formula import Formula, FormulaError, Substitution
from ..syntax.parser import parse_formula
from .system import (
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

logger = logging.getLogger(__name__)

_LINE = re.compile(r"^\s*(\d+)\s*\.\s*(.+?)\s*;\s*(.+?)\s*$")
_AXIOM = re.compile(r"^ax\s+(\S+)\s*(?:\[(.*)\])?$")


class ProofScriptError(ValueError):
    """Raised when a proof script cannot be parsed."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_bindings(text: str, line: int) -> Substitution:
    mapping: Dict[str, Formula] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        name, sep, value = part.partition("=")
        if not sep or not name.strip():
            raise ProofScriptError(f"bad binding {part.strip()!r}, expected name=formula", line)
        try:
            mapping[name.strip()] = parse_formula(value.strip())
        except FormulaError as e:
            raise ProofScriptError(f"bad formula in binding {part.strip()!r}: {e}", line) from e
    return Substitution(mapping)


def _parse_justification(text: str, line: int) -> Justification:
    if text == "hyp":
        return Hypothesis()
    axiom = _AXIOM.match(text)
    if axiom:
        bindings = axiom.group(2)
        sigma = _parse_bindings(bindings, line) if bindings is not None else None
        return AxiomInstance(axiom.group(1), sigma)
    parts = text.split()
    try:
        cited = tuple(int(p) for p in parts[1:])
    except ValueError as e:
        raise ProofScriptError(f"bad justification {text!r}", line) from e
    if not cited:
        raise ProofScriptError(f"rule {parts[0]} cites no premise lines", line)
    return RuleApplication(parts[0], cited)


def parse_proof_script(text: str) -> Proof:
    """
    Parse a proof script.

    The proof's hypotheses are the formulas of its `hyp` lines.

    Raises:
        ProofScriptError: On malformed lines, formulas or numbering
    """
    lines: List[ProofLine] = []
    for source_line, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        match = _LINE.match(stripped)
        if not match:
            raise ProofScriptError(
                f"expected '<n>. <formula> ; <justification>', got {stripped!r}", source_line
            )
        number = int(match.group(1))
        if number != len(lines) + 1:
            raise ProofScriptError(f"expected line number {len(lines) + 1}, got {number}", source_line)
        try:
            formula = parse_formula(match.group(2))
        except FormulaError as e:
            raise ProofScriptError(str(e), source_line) from e
        lines.append(ProofLine(formula, _parse_justification(match.group(3), source_line)))
    if not lines:
        raise ProofScriptError("script contains no proof lines", 1)
    hypotheses = frozenset(l.formula for l in lines if isinstance(l.justification, Hypothesis))
    return Proof(tuple(lines), hypotheses)


def format_proof(proof: Proof) -> str:
    """Render a proof in script form (one line per proof line, trailing newline)."""
    width = len(str(len(proof.lines)))
    rendered = [
        f"{n:>{width}}. {line.formula.text} ; {line.justification.describe()}"
        for n, line in enumerate(proof.lines, start=1)
    ]
    return "\n".join(rendered) + "\n"


def load_proof(path: Path) -> Proof:
    proof = parse_proof_script(Path(path).read_text(encoding="utf-8"))
    logger.debug(f"Loaded {len(proof)}-line proof from {path}")
    return proof


class InclusionDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    sources: List[str] = Field(min_length=1)
    targets: List[str] = Field(min_length=1)


class RuleDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = Field(min_length=1)
    premises: List[str] = Field(min_length=1)
    conclusion: str
    restrict: Union[bool, InclusionDocument] = False
    restricted_name: Optional[str] = None
    restricted_form: Optional[InclusionDocument] = None


class SystemDocument(BaseModel):
    """A Hilbert system: language, named axiom schemas (in order) and rules."""

    model_config = ConfigDict(extra="forbid")

    name: str
    language: List[OperatorSpec]
    axioms: Dict[str, str] = Field(default_factory=dict)
    rules: List[RuleDocument] = Field(default_factory=list)


def _inclusion_to_document(inclusion: VariableInclusion) -> InclusionDocument:
    return InclusionDocument(
        sources=[s.text for s in inclusion.sources],
        targets=[t.text for t in inclusion.targets],
    )


def _document_to_inclusion(doc: InclusionDocument) -> VariableInclusion:
    return VariableInclusion(
        tuple(parse_formula(s) for s in doc.sources),
        tuple(parse_formula(t) for t in doc.targets),
    )


def system_to_document(system: HilbertSystem) -> SystemDocument:
    rules = []
    for rule in system.rules:
        restrict: Union[bool, InclusionDocument] = False
        if rule.condition is not None:
            standard = rule.condition == rule.standard_inclusion()
            restrict = True if standard else _inclusion_to_document(rule.condition)
        rules.append(
            RuleDocument(
                name=rule.name,
                premises=[p.text for p in rule.premises],
                conclusion=rule.conclusion.text,
                restrict=restrict,
                restricted_name=rule.restricted_name or None,
                restricted_form=(
                    _inclusion_to_document(rule.restricted_condition)
                    if rule.restricted_condition is not None
                    else None
                ),
            )
        )
    return SystemDocument(
        name=system.name,
        language=language_to_specs(system.language),
        axioms={name: schema.text for name, schema in system.axioms},
        rules=rules,
    )


def document_to_system(doc: SystemDocument) -> HilbertSystem:
    """
    Build a HilbertSystem from a validated document.

    Raises:
        DocumentError: If a schema does not parse or the system is ill-formed
    """
    try:
        lang = specs_to_language(doc.language)
        axioms: List[Tuple[str, Formula]] = [
            (name, parse_formula(text, lang)) for name, text in doc.axioms.items()
        ]
        rules = []
        for r in doc.rules:
            premises = tuple(parse_formula(p, lang) for p in r.premises)
            conclusion = parse_formula(r.conclusion, lang)
            condition: Optional[VariableInclusion] = None
            if isinstance(r.restrict, InclusionDocument):
                condition = _document_to_inclusion(r.restrict)
            elif r.restrict:
                condition = VariableInclusion(premises, (conclusion,))
            rules.append(
                Rule(
                    r.name,
                    premises,
                    conclusion,
                    condition,
                    r.restricted_name or "",
                    _document_to_inclusion(r.restricted_form) if r.restricted_form else None,
                )
            )
        return HilbertSystem.build(doc.name, lang, axioms, rules)
    except (FormulaError, HilbertSystemError) as e:
        raise DocumentError(f"Invalid system document '{doc.name}': {e}") from e


def system_to_bytes(system: HilbertSystem) -> bytes:
    payload = system_to_document(system).model_dump(exclude_none=True)
    return orjson.dumps(payload, option=orjson.OPT_INDENT_2) + b"\n"


def system_from_bytes(data: Union[bytes, str], source: str = "<document>") -> HilbertSystem:
    try:
        doc = SystemDocument.model_validate(orjson.loads(data))
    except orjson.JSONDecodeError as e:
        raise DocumentError(f"{source}: invalid JSON: {e}") from e
    except ValidationError as e:
        raise DocumentError(f"{source}: {e}") from e
    return document_to_system(doc)


def load_system(path: Path) -> HilbertSystem:
    system = system_from_bytes(Path(path).read_bytes(), str(path))
    logger.info(f"Loaded system {system.name} from {path}")
    return system


def save_system(system: HilbertSystem, path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(system_to_bytes(system))
