"""
Consequence-relation conditions checked on finite instances.

- reflexivity: φ ∈ Σ implies Σ ⊢ φ
- cut: Σ ⊢ ψ and Σ ∪ {ψ} ⊢ φ imply Σ ⊢ φ
- monotonicity: Σ ⊢ φ implies Σ ∪ {ψ} ⊢ φ
- substitution invariance: Σ ⊢ φ implies σ(Σ) ⊢ σ(φ)

Plus the two facts tying a left companion to its base: ⊢^l ⊆ ⊢, and equal
theorem sets.
"""

import logging
import random
from dataclasses import dataclass
from typing import Iterable, List, Sequence

from ..syntax.formula import Formula, Language, Substitution, apply_substitution
from ..syntax.generate import random_formula
from .instances import DEFAULT_VARIABLES, Instance, format_instance
from .oracles import ConsequenceOracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyViolation:
    condition: str
    oracle: str
    detail: str

    def __str__(self) -> str:
        return f"{self.condition} fails for {self.oracle}: {self.detail}"


def random_substitution(
    lang: Language,
    rng: random.Random,
    variables: Sequence[str] = DEFAULT_VARIABLES,
    max_depth: int = 1,
) -> Substitution:
    return Substitution(
        {v: random_formula(lang, variables, max_depth, rng) for v in variables}
    )


def consequence_violations(
    oracle: ConsequenceOracle,
    lang: Language,
    instances: Iterable[Instance],
    rng: random.Random,
) -> List[PropertyViolation]:
    """
    Check reflexivity, cut, monotonicity and substitution invariance of oracle.

    Each instance supplies Σ and φ; cut uses a random ψ, monotonicity a random
    extra premise and substitution invariance a random σ, all drawn from rng.
    """
    violations: List[PropertyViolation] = []
    label = oracle.label

    def fail(condition: str, detail: str) -> None:
        violations.append(PropertyViolation(condition, label, detail))

    variables = DEFAULT_VARIABLES
    count = 0
    for instance in instances:
        count += 1
        sigma_set = frozenset(instance.premises)
        phi = instance.conclusion
        shown = format_instance(instance)

        if not oracle(sigma_set | {phi}, phi):
            fail("reflexivity", shown)

        holds = oracle(sigma_set, phi)
        extra = random_formula(lang, variables, 2, rng)
        if holds and not oracle(sigma_set | {extra}, phi):
            fail("monotonicity", f"{shown} with extra premise {extra.text}")

        psi = random_formula(lang, variables, 2, rng)
        if not holds and oracle(sigma_set, psi) and oracle(sigma_set | {psi}, phi):
            fail("cut", f"{shown} through {psi.text}")

        if holds:
            sigma = random_substitution(lang, rng, variables)
            image = frozenset(apply_substitution(sigma, p) for p in sigma_set)
            if not oracle(image, apply_substitution(sigma, phi)):
                fail("substitution invariance", f"{shown} under [{sigma.describe()}]")
    logger.debug(f"Checked consequence conditions of {label} on {count} instance(s)")
    return violations


def companion_violations(
    companion: ConsequenceOracle,
    base: ConsequenceOracle,
    instances: Iterable[Instance],
    theorems: Iterable[Formula],
) -> List[PropertyViolation]:
    """⊢^l ⊆ ⊢ on instances, and ⊢^l φ iff ⊢ φ on the listed formulas."""
    violations: List[PropertyViolation] = []
    for instance in instances:
        if companion(instance.premises, instance.conclusion) and not base(
            instance.premises, instance.conclusion
        ):
            violations.append(
                PropertyViolation("containment in base", companion.label, format_instance(instance))
            )
    for phi in theorems:
        if companion((), phi) != base((), phi):
            violations.append(
                PropertyViolation("theorem preservation", companion.label, phi.text)
            )
    return violations
