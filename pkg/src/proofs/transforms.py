"""
Proof transformations.

- translate_theorem_proof: turn a proof of a theorem into a proof in the
  restricted system, collapsing every variable lost by a rule application onto a
  variable of that application's conclusion (or onto a constant when the
  conclusion has none)
- prune_derivation: drop repeated and unreachable lines
- extract_delta: the premises whose variables all occur in the conclusion
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from ..syntax.formula import (
    Compound,
    Formula,
    Language,
    Substitution,
    Variable,
    apply_substitution,
    compose,
    match_schema,
    variables_of,
)
from .checker import check_proof
from .system import (
    AxiomInstance,
    HilbertSystem,
    Hypothesis,
    Justification,
    Proof,
    ProofLine,
    RuleApplication,
)

logger = logging.getLogger(__name__)


class TranslationError(ValueError):
    """Raised when a proof cannot be translated or pruned."""

    pass


@dataclass(frozen=True)
class _Step:
    """A proof line whose rule premises are cited by formula rather than number."""

    formula: Formula
    axiom: str = ""
    substitution: Optional[Substitution] = None
    rule: str = ""
    premises: Tuple[Formula, ...] = ()


def collapse_substitution(
    conclusion: Formula, variables: Iterable[str], lang: Language
) -> Substitution:
    """
    Map every variable outside var(conclusion) to one fixed target.

    The target is the least variable of the conclusion, or the least nullary
    operator of lang when the conclusion is variable-free.

    Raises:
        TranslationError: If the conclusion is variable-free and lang has no constant
    """
    keep = conclusion.variables
    lost = sorted(set(variables) - keep)
    if not lost:
        return Substitution.identity()
    if keep:
        target: Formula = Variable(min(keep))
    else:
        constants = lang.nullary()
        if not constants:
            raise TranslationError(
                f"{conclusion} has no variables and the language {lang} has no constant"
            )
        target = Compound(constants[0])
    return Substitution({name: target for name in lost})


def _substitute(steps: List[_Step], sigma: Substitution) -> List[_Step]:
    if not len(sigma):
        return steps
    result = []
    for step in steps:
        formula = apply_substitution(sigma, step.formula)
        if step.axiom:
            assert step.substitution is not None
            composed = compose(sigma, step.substitution).restrict(step.substitution.domain)
            result.append(_Step(formula, axiom=step.axiom, substitution=composed))
        else:
            premises = tuple(apply_substitution(sigma, p) for p in step.premises)
            result.append(_Step(formula, rule=step.rule, premises=premises))
    return result


def _dedupe(steps: List[_Step]) -> List[_Step]:
    seen: Dict[Formula, _Step] = {}
    for step in steps:
        seen.setdefault(step.formula, step)
    return list(seen.values())


def _to_proof(steps: List[_Step], hypotheses: FrozenSet[Formula] = frozenset()) -> Proof:
    numbers: Dict[Formula, int] = {}
    lines: List[ProofLine] = []
    for step in steps:
        justification: Justification
        if step.axiom:
            justification = AxiomInstance(step.axiom, step.substitution)
        else:
            justification = RuleApplication(step.rule, tuple(numbers[p] for p in step.premises))
        lines.append(ProofLine(step.formula, justification))
        numbers[step.formula] = len(lines)
    return Proof(tuple(lines), hypotheses)


def translate_theorem_proof(proof: Proof, system: HilbertSystem) -> Proof:
    """
    Translate a proof of a theorem in system into a proof in its restricted system.

    Each rule application is rebuilt from the translated proofs of its premises,
    all pushed through the substitution collapsing lost variables; the
    application then satisfies the variable-inclusion condition. Repeated lines
    are kept at their first occurrence.

    Raises:
        TranslationError: If the proof is invalid in system or uses hypotheses
    """
    if proof.hypotheses or proof.hypotheses_used:
        raise TranslationError("Only proofs from no hypotheses can be translated")
    check = check_proof(proof, system)
    if not check.is_valid:
        raise TranslationError(f"Input proof is invalid: {check.describe()}")

    memo: Dict[int, List[_Step]] = {}

    def translate(index: int) -> List[_Step]:
        if index in memo:
            return memo[index]
        line = proof.lines[index]
        justification = line.justification
        if isinstance(justification, AxiomInstance):
            sigma = justification.substitution or match_schema(
                system.axiom(justification.name), line.formula
            )
            assert sigma is not None
            steps = [_Step(line.formula, axiom=justification.name, substitution=sigma)]
        else:
            assert isinstance(justification, RuleApplication)
            rule = system.rule(justification.rule).restricted()
            premises = [proof.lines[j - 1].formula for j in justification.premises]
            sigma = collapse_substitution(line.formula, variables_of(premises), system.language)
            steps = []
            for j in justification.premises:
                steps.extend(_substitute(translate(j - 1), sigma))
            steps.append(
                _Step(
                    line.formula,
                    rule=rule.name,
                    premises=tuple(apply_substitution(sigma, p) for p in premises),
                )
            )
            steps = _dedupe(steps)
        memo[index] = steps
        return steps

    steps = translate(len(proof.lines) - 1)
    # A collapsed sub-proof may already derive the conclusion earlier.
    end = next(i for i, step in enumerate(steps) if step.formula == proof.conclusion)
    translated = _to_proof(steps[: end + 1])
    restricted = system.restricted()
    result = check_proof(translated, restricted)
    if not result.is_valid:
        raise TranslationError(f"Translated proof fails in {restricted.name}: {result.describe()}")
    logger.info(
        f"Translated a {len(proof)}-line proof of {proof.conclusion} into "
        f"{len(translated)} lines of {restricted.name}"
    )
    return translated


def prune_derivation(proof: Proof, system: Optional[HilbertSystem] = None) -> Proof:
    """
    Remove repeated lines and lines the conclusion does not depend on.

    Repeated formulas are cited at their first occurrence; only lines reachable
    backward from the last line survive. The hypotheses of the result are the
    hypotheses it still cites.

    Raises:
        TranslationError: If the proof is empty, cites non-earlier lines, or
            (when system is given) fails check_proof
    """
    if not proof.lines:
        raise TranslationError("Cannot prune an empty proof")
    if system is not None:
        check = check_proof(proof, system)
        if not check.is_valid:
            raise TranslationError(f"Input proof is invalid: {check.describe()}")

    first: Dict[Formula, int] = {}
    canonical: List[int] = []
    for i, line in enumerate(proof.lines):
        canonical.append(first.setdefault(line.formula, i))
        if isinstance(line.justification, RuleApplication):
            for j in line.justification.premises:
                if not 1 <= j <= i:
                    raise TranslationError(f"Line {i + 1} cites line {j}, which is not earlier")

    needed = set()
    stack = [canonical[-1]]
    while stack:
        i = stack.pop()
        if i in needed:
            continue
        needed.add(i)
        justification = proof.lines[i].justification
        if isinstance(justification, RuleApplication):
            stack.extend(canonical[j - 1] for j in justification.premises)

    keep = sorted(needed)
    renumber = {old: new for new, old in enumerate(keep, start=1)}
    lines: List[ProofLine] = []
    for old in keep:
        line = proof.lines[old]
        justification = line.justification
        if isinstance(justification, RuleApplication):
            cited = tuple(renumber[canonical[j - 1]] for j in justification.premises)
            line = ProofLine(line.formula, RuleApplication(justification.rule, cited))
        lines.append(line)
    hypotheses = frozenset(
        line.formula for line in lines if isinstance(line.justification, Hypothesis)
    )
    logger.debug(f"Pruned proof from {len(proof)} to {len(lines)} lines")
    return Proof(tuple(lines), hypotheses)


def extract_delta(premises: Iterable[Formula], conclusion: Formula) -> FrozenSet[Formula]:
    """The premises whose variables all occur in the conclusion."""
    return frozenset(p for p in premises if p.variables <= conclusion.variables)
