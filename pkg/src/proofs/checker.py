"""
Proof checking.

An invalid proof is a normal outcome, not an exception: check_proof returns a
ProofCheck naming the first offending line and, for side-condition failures, the
variables lost between premises and conclusion.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Optional

from ..syntax.formula import (
    Formula,
    FormulaError,
    Substitution,
    apply_substitution,
    check_formula,
    match_all,
    match_schema,
)
from .system import (
    AxiomInstance,
    HilbertSystem,
    Hypothesis,
    Proof,
    RuleApplication,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProofCheck:
    """
    Outcome of checking a proof against a system.

    Attributes:
        is_valid: True when every line is justified
        line: 1-based number of the first bad line, if any
        message: Description of the failure
        missing_variables: Variables lost by a rule application violating its condition
    """

    is_valid: bool
    line: Optional[int] = None
    message: str = ""
    missing_variables: FrozenSet[str] = field(default_factory=frozenset)

    def describe(self) -> str:
        if self.is_valid:
            return "ok"
        return f"error at line {self.line}: {self.message}"


def _fail(line: int, message: str, missing: FrozenSet[str] = frozenset()) -> ProofCheck:
    logger.debug(f"Proof rejected at line {line}: {message}")
    return ProofCheck(False, line, message, missing)


def axiom_substitution(
    system: HilbertSystem, name: str, formula: Formula
) -> Optional[Substitution]:
    """The substitution instantiating axiom name to formula, if it is an instance."""
    return match_schema(system.axiom(name), formula)


def check_proof(proof: Proof, system: HilbertSystem) -> ProofCheck:
    """
    Check every line of proof against system.

    A line is justified when it is a member of the proof's hypotheses, an instance
    of the named axiom (under the given substitution, or any when none is given), or
    the conclusion of the named rule applied to strictly earlier lines whose side
    condition, if any, holds on the instantiated formulas.
    """
    if not proof.lines:
        return ProofCheck(False, None, "proof has no lines")

    for number, line in enumerate(proof.lines, start=1):
        formula, justification = line.formula, line.justification
        try:
            check_formula(formula, system.language)
        except FormulaError as e:
            return _fail(number, str(e))

        if isinstance(justification, Hypothesis):
            if formula not in proof.hypotheses:
                return _fail(number, f"{formula} is not a hypothesis")
            continue

        if isinstance(justification, AxiomInstance):
            if not system.has_axiom(justification.name):
                return _fail(number, f"{system.name} has no axiom {justification.name}")
            schema = system.axiom(justification.name)
            sigma = justification.substitution
            if sigma is None:
                if match_schema(schema, formula) is None:
                    return _fail(number, f"{formula} is not an instance of {justification.name} ({schema})")
            elif apply_substitution(sigma, schema) != formula:
                return _fail(
                    number,
                    f"{justification.name} under [{sigma.describe()}] gives "
                    f"{apply_substitution(sigma, schema)}, not {formula}",
                )
            continue

        if isinstance(justification, RuleApplication):
            rule = system.cited_rule(justification.rule)
            if rule is None:
                return _fail(number, f"{system.name} has no rule {justification.rule}")
            if rule.name != justification.rule:
                logger.debug(f"Line {number}: {justification.rule} checked as {rule.name}")
            cited = justification.premises
            if len(cited) != len(rule.premises):
                return _fail(
                    number,
                    f"{rule.name} takes {len(rule.premises)} premise(s), {len(cited)} cited",
                )
            for j in cited:
                if not 1 <= j < number:
                    return _fail(number, f"premise line {j} is not an earlier line")
            premises = [proof.lines[j - 1].formula for j in cited]
            sigma = match_all(
                list(rule.premises) + [rule.conclusion], premises + [formula]
            )
            if sigma is None:
                shown = ", ".join(p.text for p in premises)
                return _fail(number, f"{shown} / {formula} does not match {rule.name}")
            if rule.condition is not None and not rule.condition.holds(sigma):
                return _fail(
                    number,
                    f"{rule.name} side condition fails: {rule.condition.failure_message(sigma)}",
                    rule.condition.missing(sigma),
                )
            continue

        return _fail(number, f"unknown justification {justification!r}")

    return ProofCheck(True)
