"""
Paraconsistency and deduction-theorem probes over matrices.

Probes use the fresh variables p and q. A matrix's left variable inclusion
companion is probed through its contaminating extension m ⊕ 1, which defines
the same consequence relation as {m, m ⊕ 1}.
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..semantics.algebra import Countermodel, Matrix, consequence, find_countermodel
from ..semantics.classes import MissingOperatorError
from ..semantics.plonka import adjoin_contaminating
from ..syntax.formula import Compound, Formula, Language, Variable, variables_of
from ..syntax.generate import enumerate_formulas
from ..syntax.parser import parse_formula
from .registry import get_matrix

logger = logging.getLogger(__name__)

P, Q = Variable("p"), Variable("q")


def _require(m: Matrix, *symbols: str) -> None:
    missing = [s for s in symbols if not m.language.has(s)]
    if missing:
        raise MissingOperatorError(f"{m.name} lacks operator(s) {missing} needed for this probe")


def probe_ecq(m: Matrix) -> bool:
    """True iff {p, ¬p} ⊨ q in m."""
    _require(m, "~")
    return consequence((P, Compound("~", (P,))), Q, [m])


def probe_land_ecq(m: Matrix) -> bool:
    """True iff p∧¬p ⊨ q in m."""
    _require(m, "&", "~")
    return consequence((parse_formula("p & ~p"),), Q, [m])


def probe_lnc(m: Matrix) -> bool:
    """True iff ¬(p∧¬p) is a tautology of m."""
    _require(m, "&", "~")
    return consequence((), parse_formula("~(p & ~p)"), [m])


class Paraconsistency(Enum):
    NOT = "not paraconsistent"
    WEAK = "weakly paraconsistent"
    STRONG = "strongly paraconsistent"


def classify_paraconsistency(m: Matrix) -> Paraconsistency:
    """Not paraconsistent if ECQ holds; weakly if only ECQ fails; strongly if LNC fails too."""
    _require(m, "&", "~")
    if probe_ecq(m):
        return Paraconsistency.NOT
    if probe_lnc(m):
        return Paraconsistency.WEAK
    return Paraconsistency.STRONG


def predict_companion_class(m: Matrix) -> Paraconsistency:
    """
    Classification of m ⊕ 1 read off m alone.

    ECQ fails in m ⊕ 1 as soon as m has an undesignated value (p = ω, q
    undesignated), and m ⊕ 1 validates ¬(p∧¬p) exactly when m does.
    """
    _require(m, "&", "~")
    if set(m.algebra.universe) <= m.designated:
        return Paraconsistency.NOT
    return Paraconsistency.WEAK if probe_lnc(m) else Paraconsistency.STRONG


@dataclass(frozen=True)
class DeductionInstance:
    """Premises Σ, antecedent α and consequent β."""

    premises: Tuple[Formula, ...]
    antecedent: Formula
    consequent: Formula

    @property
    def implication(self) -> Formula:
        return Compound("->", (self.antecedent, self.consequent))

    @property
    def proviso(self) -> bool:
        """var(α) ⊆ var(β)."""
        return self.antecedent.variables <= self.consequent.variables

    def describe(self) -> str:
        premises = ", ".join(p.text for p in self.premises) or "∅"
        return f"Σ={{{premises}}}, α={self.antecedent.text}, β={self.consequent.text}"


@dataclass(frozen=True)
class DeductionRow:
    """
    Both directions of the deduction theorem on one instance.

    Attributes:
        instance: The (Σ, α, β) triple
        premise_side: Σ ∪ {α} ⊨ β
        implication_side: Σ ⊨ α→β
        witness: A countermodel refuting the failing side, if a direction fails
    """

    instance: DeductionInstance
    premise_side: bool
    implication_side: bool
    witness: Optional[Countermodel] = None

    @property
    def dt_holds(self) -> bool:
        return not self.premise_side or self.implication_side

    @property
    def converse_holds(self) -> bool:
        return not self.implication_side or self.premise_side

    def describe(self) -> str:
        text = (
            f"{self.instance.describe()}: Σ∪{{α}} ⊨ β is {self.premise_side}, "
            f"Σ ⊨ α→β is {self.implication_side}; DT {'holds' if self.dt_holds else 'fails'}, "
            f"converse {'holds' if self.converse_holds else 'fails'}"
        )
        if not self.instance.proviso:
            text += "; proviso var(α) ⊆ var(β) violated"
        if self.witness is not None:
            text += f"; witness {self.witness.describe()}"
        return text


@dataclass
class DeductionReport:
    matrix: Matrix
    rows: List[DeductionRow] = field(default_factory=list)

    @property
    def dt_holds(self) -> bool:
        return all(row.dt_holds for row in self.rows)

    @property
    def converse_holds(self) -> bool:
        return all(row.converse_holds for row in self.rows)


def _deduction_row(m: Matrix, instance: DeductionInstance) -> DeductionRow:
    with_antecedent = instance.premises + (instance.antecedent,)
    premise_witness = find_countermodel(with_antecedent, instance.consequent, [m])
    implication_witness = find_countermodel(instance.premises, instance.implication, [m])
    premise_side = premise_witness is None
    implication_side = implication_witness is None
    witness = None
    if premise_side and not implication_side:
        witness = implication_witness
    elif implication_side and not premise_side:
        witness = premise_witness
    return DeductionRow(instance, premise_side, implication_side, witness)


def probe_deduction(m: Matrix, instances: Iterable[DeductionInstance]) -> DeductionReport:
    """Evaluate both deduction-theorem directions over m for each instance."""
    _require(m, "->")
    report = DeductionReport(m)
    for instance in instances:
        report.rows.append(_deduction_row(m, instance))
    logger.debug(
        f"Deduction probe over {m.name}: {len(report.rows)} instance(s), "
        f"DT {'holds' if report.dt_holds else 'fails'}, "
        f"converse {'holds' if report.converse_holds else 'fails'}"
    )
    return report


def deduction_instance(premises: Sequence[str], antecedent: str, consequent: str) -> DeductionInstance:
    return DeductionInstance(
        tuple(parse_formula(p) for p in premises),
        parse_formula(antecedent),
        parse_formula(consequent),
    )


def enumerate_deduction_instances(
    lang: Language,
    variables: Sequence[str] = ("p", "q"),
    max_depth: int = 1,
    max_premises: int = 1,
    premise_depth: Optional[int] = None,
) -> Iterator[DeductionInstance]:
    """
    Every (Σ, α, β) with α, β of depth ≤ max_depth and |Σ| ≤ max_premises.

    Premises are drawn from formulas of depth ≤ premise_depth (default max_depth).
    """
    formulas = list(enumerate_formulas(lang, variables, max_depth))
    if premise_depth is None or premise_depth == max_depth:
        premise_pool = formulas
    else:
        premise_pool = list(enumerate_formulas(lang, variables, premise_depth))
    for k in range(max_premises + 1):
        for premises in itertools.combinations(premise_pool, k):
            for alpha, beta in itertools.product(formulas, repeat=2):
                yield DeductionInstance(premises, alpha, beta)


@dataclass(frozen=True)
class TransferViolation:
    instance: DeductionInstance
    message: str

    def __str__(self) -> str:
        return f"{self.instance.describe()}: {self.message}"


def deduction_transfer_violations(
    m: Matrix, instances: Iterable[DeductionInstance]
) -> List[TransferViolation]:
    """
    Check how the deduction theorem passes from m to its left companion.

    m is expected to satisfy both directions of the deduction theorem; an
    instance where it does not is reported as a violation. The companion must
    satisfy the deduction theorem on every instance. Its converse must hold
    whenever var(α) ⊆ var(β); otherwise it holds exactly when Σ ⊭^l α→β or
    Σ ⊨^l β.
    """
    _require(m, "->")
    companion = adjoin_contaminating(m)
    violations: List[TransferViolation] = []
    checked = 0
    for instance in instances:
        checked += 1
        base = _deduction_row(m, instance)
        if not (base.dt_holds and base.converse_holds):
            violations.append(TransferViolation(instance, f"{m.name} itself fails: {base.describe()}"))
            continue
        row = _deduction_row(companion, instance)
        if not row.dt_holds:
            violations.append(TransferViolation(instance, "deduction theorem fails in the companion"))
        if instance.proviso:
            if not row.converse_holds:
                violations.append(
                    TransferViolation(instance, "converse fails although var(α) ⊆ var(β)")
                )
        else:
            expected = not row.implication_side or consequence(
                instance.premises, instance.consequent, [companion]
            )
            if row.converse_holds != expected:
                violations.append(
                    TransferViolation(
                        instance,
                        f"converse is {row.converse_holds} but Σ ⊭ α→β or Σ ⊨ β is {expected}",
                    )
                )
    logger.info(
        f"Deduction transfer over {m.name}: {checked} instance(s) checked, "
        f"{len(violations)} violation(s)"
    )
    return violations


@dataclass(frozen=True)
class NonCompanionWitness:
    """
    Facts showing a consequence relation is no left variable inclusion companion.

    Σ ⊨ φ holds, φ is not a theorem, and every subset of Σ whose variables occur
    in φ is empty; a left companion would then need ⊨ φ.
    """

    premises: Tuple[Formula, ...]
    conclusion: Formula
    entails: bool
    conclusion_is_theorem: bool
    included_subsets: Tuple[FrozenSet[Formula], ...]

    @property
    def is_witness(self) -> bool:
        return (
            self.entails
            and not self.conclusion_is_theorem
            and self.included_subsets == (frozenset(),)
        )

    def describe(self) -> str:
        premises = ", ".join(p.text for p in self.premises)
        subsets = ", ".join(
            "{" + ", ".join(sorted(f.text for f in s)) + "}" for s in self.included_subsets
        )
        return (
            f"{{{premises}}} ⊨ {self.conclusion.text}: {self.entails}; "
            f"⊨ {self.conclusion.text}: {self.conclusion_is_theorem}; "
            f"var-included subsets: {subsets}"
        )


def non_companion_witness(
    m: Matrix, premises: Sequence[Formula], conclusion: Formula
) -> NonCompanionWitness:
    subsets = []
    for k in range(len(premises) + 1):
        for subset in itertools.combinations(premises, k):
            if variables_of(subset) <= conclusion.variables:
                subsets.append(frozenset(subset))
    return NonCompanionWitness(
        tuple(premises),
        conclusion,
        consequence(premises, conclusion, [m]),
        consequence((), conclusion, [m]),
        tuple(subsets),
    )


def rm3_non_companion_witness(m3: Optional[Matrix] = None) -> NonCompanionWitness:
    """{p, p→q} ⊨ q in M3, q is no theorem, and only ∅ has its variables inside var(q)."""
    return non_companion_witness(m3 or get_matrix("M3"), (P, parse_formula("p -> q")), Q)
