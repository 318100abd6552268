"""
Consequence oracles and companion constructions.

An oracle decides (premises, conclusion) pairs. Matrix oracles are exact;
Hilbert oracles run bounded proof search and are semi-decisions, so a False
verdict from them only means "not found within limits".
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence

from ..proofs.search import derive_bounded
from ..proofs.system import HilbertSystem
from ..proofs.transforms import extract_delta
from ..semantics.algebra import Matrix, consequence
from ..semantics.plonka import adjoin_contaminating
from ..syntax.formula import Formula
from ..utils.config import SearchLimits
from .instances import Instance, format_instance

logger = logging.getLogger(__name__)

Decision = Callable[[FrozenSet[Formula], Formula], bool]


class Provenance(Enum):
    """Where an oracle's verdicts come from."""

    MATRIX = "matrix"
    HILBERT = "hilbert"
    COMPANION = "companion"


@dataclass(frozen=True)
class ConsequenceOracle:
    """
    A consequence relation given as a decision procedure.

    Attributes:
        decide: Procedure over a finite premise set and a conclusion
        provenance: Matrix-defined, bounded Hilbert search, or a companion
        label: Display name, e.g. "B2" or "minimal^l"
        exhaustive: False when False verdicts mean "not found within limits"
        base: The oracle a companion was built from
    """

    decide: Decision = field(repr=False)
    provenance: Provenance
    label: str
    exhaustive: bool = True
    base: Optional["ConsequenceOracle"] = field(default=None, repr=False)

    def __call__(self, premises: Iterable[Formula], conclusion: Formula) -> bool:
        return self.decide(frozenset(premises), conclusion)

    def verdict_text(self, verdict: bool) -> str:
        if verdict:
            return "holds"
        return "fails" if self.exhaustive else "not found within limits"

    def __str__(self) -> str:
        return self.label


def matrix_oracle(matrices: Sequence[Matrix], label: str = "") -> ConsequenceOracle:
    """⊨ over a finite class of matrices."""
    matrices = tuple(matrices)

    def decide(premises: FrozenSet[Formula], conclusion: Formula) -> bool:
        return consequence(premises, conclusion, matrices)

    return ConsequenceOracle(
        decide, Provenance.MATRIX, label or ",".join(m.name for m in matrices)
    )


def hilbert_oracle(
    system: HilbertSystem, limits: Optional[SearchLimits] = None
) -> ConsequenceOracle:
    """⊢ of a Hilbert system, decided by bounded proof search."""
    limits = limits or SearchLimits()

    def decide(premises: FrozenSet[Formula], conclusion: Formula) -> bool:
        return derive_bounded(premises, conclusion, system, limits) is not None

    return ConsequenceOracle(decide, Provenance.HILBERT, system.name, exhaustive=False)


def left_companion(base: ConsequenceOracle) -> ConsequenceOracle:
    """
    The left variable inclusion companion of base.

    Σ ⊢^l φ iff the premises whose variables all occur in φ already yield φ in
    base. Checking this single largest subset suffices for monotone bases.
    """

    def decide(premises: FrozenSet[Formula], conclusion: Formula) -> bool:
        return base.decide(extract_delta(premises, conclusion), conclusion)

    return ConsequenceOracle(
        decide, Provenance.COMPANION, f"{base.label}^l", base.exhaustive, base
    )


def semantic_left_companion(matrices: Sequence[Matrix]) -> ConsequenceOracle:
    """
    ⊨ over each matrix together with its contaminating extension m ⊕ 1.

    Coincides with left_companion(matrix_oracle(matrices)).
    """
    extended: List[Matrix] = []
    for m in matrices:
        extended.extend((m, adjoin_contaminating(m)))
    return matrix_oracle(extended, ",".join(m.name for m in extended))


class Outcome(Enum):
    AGREE = "agree"
    A_ONLY = "a-only"
    B_ONLY = "b-only"


@dataclass(frozen=True)
class ComparisonRow:
    instance: Instance
    a: bool
    b: bool

    @property
    def outcome(self) -> Outcome:
        if self.a == self.b:
            return Outcome.AGREE
        return Outcome.A_ONLY if self.a else Outcome.B_ONLY


@dataclass
class ComparisonReport:
    """Per-instance verdicts of two oracles with a summary."""

    a: ConsequenceOracle
    b: ConsequenceOracle
    rows: List[ComparisonRow] = field(default_factory=list)

    def counts(self) -> Dict[Outcome, int]:
        counts = {outcome: 0 for outcome in Outcome}
        for row in self.rows:
            counts[row.outcome] += 1
        return counts

    @property
    def all_agree(self) -> bool:
        return all(row.outcome is Outcome.AGREE for row in self.rows)

    def disagreements(self) -> List[ComparisonRow]:
        return [row for row in self.rows if row.outcome is not Outcome.AGREE]

    def lines(self) -> List[str]:
        rendered = []
        for row in self.rows:
            rendered.append(
                f"{format_instance(row.instance)}  "
                f"[{self.a.label}: {self.a.verdict_text(row.a)}; "
                f"{self.b.label}: {self.b.verdict_text(row.b)}] {row.outcome.value}"
            )
        return rendered

    def summary(self) -> str:
        counts = self.counts()
        return (
            f"{len(self.rows)} instance(s): {counts[Outcome.AGREE]} agree, "
            f"{counts[Outcome.A_ONLY]} {self.a.label}-only, "
            f"{counts[Outcome.B_ONLY]} {self.b.label}-only"
        )


def compare_oracles(
    a: ConsequenceOracle, b: ConsequenceOracle, instances: Iterable[Instance]
) -> ComparisonReport:
    """Run both oracles on every instance and classify the verdict pairs."""
    report = ComparisonReport(a, b)
    for instance in instances:
        report.rows.append(
            ComparisonRow(
                instance,
                a(instance.premises, instance.conclusion),
                b(instance.premises, instance.conclusion),
            )
        )
    logger.info(f"Compared {a.label} with {b.label}: {report.summary()}")
    return report
