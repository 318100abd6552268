"""
Bounded proof search.

Forward saturation over a fixed candidate pool: level 0 holds the hypotheses and
every axiom instance whose metavariables range over the subformulas of the
hypotheses and the goal; each later round applies every rule once to the formulas
known so far, keeping conclusions within the formula-size cap. Rounds are
semi-naive (each application uses at least one formula new in the previous
round) and candidate order is fixed, so a given input always yields the same proof.

Failure to find a proof means "not found within limits", never refutation.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..syntax.formula import (
    Formula,
    Substitution,
    apply_substitution,
    match_schema,
    subformulas,
)
from ..utils.config import SearchLimits
from .system import (
    AxiomInstance,
    HilbertSystem,
    Hypothesis,
    Justification,
    Proof,
    ProofLine,
    Rule,
    RuleApplication,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Entry:
    kind: str  # "hyp", "ax" or "rule"
    name: str = ""
    substitution: Optional[Substitution] = None
    premises: Tuple[Formula, ...] = ()


class _KnownFormulas:
    """Derived formulas indexed by top operator and by (operator, left argument)."""

    def __init__(self) -> None:
        self.entries: Dict[Formula, _Entry] = {}
        self.order: List[Formula] = []
        self.by_op: Dict[str, List[Formula]] = {}
        self.by_left: Dict[Tuple[str, Formula], List[Formula]] = {}

    def __contains__(self, f: Formula) -> bool:
        return f in self.entries

    def __len__(self) -> int:
        return len(self.order)

    def add(self, f: Formula, entry: _Entry) -> bool:
        if f in self.entries:
            return False
        self.entries[f] = entry
        self.order.append(f)
        if f.operator is not None:
            self.by_op.setdefault(f.operator, []).append(f)
            if f.args:
                self.by_left.setdefault((f.operator, f.args[0]), []).append(f)
        return True

    def candidates(self, schema: Formula, bindings: Dict[str, Formula]) -> Sequence[Formula]:
        if schema.variables <= bindings.keys():
            instance = apply_substitution(Substitution(bindings), schema)
            return [instance] if instance in self.entries else []
        if schema.is_variable:
            return self.order
        assert schema.operator is not None
        left = schema.args[0] if schema.args else None
        if left is not None and left.variables <= bindings.keys():
            key = (schema.operator, apply_substitution(Substitution(bindings), left))
            return self.by_left.get(key, [])
        return self.by_op.get(schema.operator, [])


def candidate_pool(formulas: Iterable[Formula], max_size: int) -> List[Formula]:
    """Distinct subformulas of the given formulas within the size cap, in (size, text) order."""
    pool = {s for f in formulas for s in subformulas(f) if s.size <= max_size}
    return sorted(pool)


class ProofSearch:
    """
    Bounded forward proof search in one Hilbert system.

    Args:
        system: The system whose axioms and rules are used
        limits: Rule rounds and formula-size cap
    """

    def __init__(self, system: HilbertSystem, limits: Optional[SearchLimits] = None) -> None:
        self.system = system
        self.limits = limits or SearchLimits()
        self.capped = False

    def derive(self, hypotheses: Iterable[Formula], goal: Formula) -> Optional[Proof]:
        hyps: FrozenSet[Formula] = frozenset(hypotheses)
        cap = self.limits.max_formula_size
        pool = candidate_pool(sorted(hyps) + [goal], cap)
        known = _KnownFormulas()
        self.capped = False

        for h in sorted(hyps):
            known.add(h, _Entry("hyp"))
        for name, schema in self.system.axioms:
            for instance, sigma in self._axiom_instances(schema, pool):
                known.add(instance, _Entry("ax", name, sigma))
        logger.debug(f"Search level 0: {len(known)} formulas from a pool of {len(pool)}")

        frontier = set(known.order)
        for round_number in range(1, self.limits.depth + 1):
            if goal in known:
                break
            fresh: Dict[Formula, _Entry] = {}
            for rule in self.system.rules:
                self._apply_rule(rule, known, frontier, pool, fresh)
            if not fresh:
                logger.debug(f"Search saturated after {round_number - 1} round(s)")
                break
            for f, entry in fresh.items():
                known.add(f, entry)
            frontier = set(fresh)
            logger.debug(f"Search round {round_number}: {len(fresh)} new, {len(known)} known")

        if goal not in known:
            if self.capped:
                logger.warning(
                    f"No proof of {goal} in {self.system.name} within depth "
                    f"{self.limits.depth}; some candidates exceeded size {cap}"
                )
            return None
        proof = self._reconstruct(goal, known, hyps)
        logger.info(f"Found a {len(proof)}-line proof of {goal} in {self.system.name}")
        return proof

    def _axiom_instances(
        self, schema: Formula, pool: Sequence[Formula]
    ) -> Iterator[Tuple[Formula, Substitution]]:
        metavariables = sorted(schema.variables)
        for values in itertools.product(pool, repeat=len(metavariables)):
            sigma = Substitution(dict(zip(metavariables, values)))
            instance = apply_substitution(sigma, schema)
            if instance.size > self.limits.max_formula_size:
                self.capped = True
                continue
            yield instance, sigma

    def _matches(
        self, rule: Rule, known: _KnownFormulas
    ) -> Iterator[Tuple[Dict[str, Formula], Tuple[Formula, ...]]]:
        order = sorted(range(len(rule.premises)), key=lambda i: -rule.premises[i].size)

        def extend(
            k: int, bindings: Dict[str, Formula], chosen: Dict[int, Formula]
        ) -> Iterator[Tuple[Dict[str, Formula], Tuple[Formula, ...]]]:
            if k == len(order):
                yield bindings, tuple(chosen[i] for i in range(len(rule.premises)))
                return
            i = order[k]
            schema = rule.premises[i]
            for candidate in known.candidates(schema, bindings):
                sigma = match_schema(schema, candidate, bindings)
                if sigma is None:
                    continue
                yield from extend(k + 1, dict(sigma.mapping), {**chosen, i: candidate})

        yield from extend(0, {}, {})

    def _apply_rule(
        self,
        rule: Rule,
        known: _KnownFormulas,
        frontier: set,
        pool: Sequence[Formula],
        fresh: Dict[Formula, _Entry],
    ) -> None:
        cap = self.limits.max_formula_size
        for bindings, premises in self._matches(rule, known):
            if not any(p in frontier for p in premises):
                continue
            free = sorted(rule.conclusion.variables - bindings.keys())
            for values in itertools.product(pool, repeat=len(free)):
                sigma = Substitution({**bindings, **dict(zip(free, values))})
                conclusion = apply_substitution(sigma, rule.conclusion)
                if conclusion.size > cap:
                    self.capped = True
                    continue
                if conclusion in known or conclusion in fresh:
                    continue
                if rule.condition is not None and not rule.condition.holds(sigma):
                    continue
                fresh[conclusion] = _Entry("rule", rule.name, sigma, premises)

    @staticmethod
    def _reconstruct(goal: Formula, known: _KnownFormulas, hypotheses: FrozenSet[Formula]) -> Proof:
        lines: List[ProofLine] = []
        numbers: Dict[Formula, int] = {}

        def emit(f: Formula) -> int:
            if f in numbers:
                return numbers[f]
            entry = known.entries[f]
            justification: Justification
            if entry.kind == "rule":
                cited = tuple(emit(p) for p in entry.premises)
                justification = RuleApplication(entry.name, cited)
            elif entry.kind == "ax":
                justification = AxiomInstance(entry.name, entry.substitution)
            else:
                justification = Hypothesis()
            lines.append(ProofLine(f, justification))
            numbers[f] = len(lines)
            return numbers[f]

        emit(goal)
        return Proof(tuple(lines), hypotheses)


def derive_bounded(
    hypotheses: Iterable[Formula],
    goal: Formula,
    system: HilbertSystem,
    limits: Optional[SearchLimits] = None,
) -> Optional[Proof]:
    """
    Search for a proof of goal from hypotheses in system within limits.

    Returns:
        A proof accepted by check_proof, or None when none was found within limits
    """
    return ProofSearch(system, limits).derive(hypotheses, goal)
