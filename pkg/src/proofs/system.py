"""
Hilbert Systems

Axiom schemas, inference rules with optional variable-inclusion side conditions,
and proof objects.

Schemas are plain formulas whose variables act as metavariables. A rule's side
condition is a VariableInclusion between some of its premise schemas and some
schemas of the conclusion side, evaluated on the instantiated formulas.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ..syntax.formula import (
    Formula,
    FormulaError,
    Language,
    Substitution,
    apply_substitution,
    check_formula,
    variables_of,
)

logger = logging.getLogger(__name__)

# Names given to the restricted forms of the best-known rules.
RESTRICTED_NAMES: Dict[str, str] = {"MP": "RMP", "HS": "RHS"}


class HilbertSystemError(ValueError):
    """Raised when a rule or Hilbert system is ill-formed."""

    pass


@dataclass(frozen=True)
class VariableInclusion:
    """
    Side condition var(σ(sources)) ⊆ var(σ(targets)).

    Attributes:
        sources: Schemas whose instantiated variables must be included
        targets: Schemas whose instantiated variables must include them
    """

    sources: Tuple[Formula, ...]
    targets: Tuple[Formula, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "targets", tuple(self.targets))
        if not self.sources or not self.targets:
            raise HilbertSystemError("A variable-inclusion condition needs sources and targets")

    def instantiate(self, sigma: Substitution) -> Tuple[Tuple[Formula, ...], Tuple[Formula, ...]]:
        return (
            tuple(apply_substitution(sigma, s) for s in self.sources),
            tuple(apply_substitution(sigma, t) for t in self.targets),
        )

    def missing(self, sigma: Substitution) -> FrozenSet[str]:
        """Variables of the instantiated sources absent from the instantiated targets."""
        sources, targets = self.instantiate(sigma)
        return variables_of(sources) - variables_of(targets)

    def holds(self, sigma: Substitution) -> bool:
        return not self.missing(sigma)

    def failure_message(self, sigma: Substitution) -> str:
        sources, targets = self.instantiate(sigma)
        left = ", ".join(f.text for f in sources)
        right = ", ".join(f.text for f in targets)
        return f"var({left}) ⊄ var({right})"

    def describe(self) -> str:
        left = " ∪ ".join(f"var({s.text})" for s in self.sources)
        right = " ∪ ".join(f"var({t.text})" for t in self.targets)
        return f"{left} ⊆ {right}"

    @property
    def schematic(self) -> bool:
        """True when every instance satisfies the condition."""
        return variables_of(self.sources) <= variables_of(self.targets)


@dataclass(frozen=True)
class Rule:
    """
    An inference rule premises / conclusion over schemas.

    Attributes:
        name: Rule name used in justifications
        premises: Premise schemas (at least one)
        conclusion: Conclusion schema
        condition: Side condition checked on every application, if any
        restricted_name: Name of the restricted form (default: name with a prime)
        restricted_condition: Custom side condition for the restricted form
    """

    name: str
    premises: Tuple[Formula, ...]
    conclusion: Formula
    condition: Optional[VariableInclusion] = None
    restricted_name: str = ""
    restricted_condition: Optional[VariableInclusion] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))
        if not self.name:
            raise HilbertSystemError("Rule name cannot be empty")
        if not self.premises:
            raise HilbertSystemError(f"Rule {self.name} needs at least one premise")

    @property
    def metavariables(self) -> FrozenSet[str]:
        return variables_of(self.premises + (self.conclusion,))

    def standard_inclusion(self) -> VariableInclusion:
        return VariableInclusion(self.premises, (self.conclusion,))

    @property
    def is_restricted(self) -> bool:
        return self.condition is not None

    @property
    def loses_variables(self) -> bool:
        """True when some instance has premise variables missing from the conclusion."""
        return not self.standard_inclusion().schematic

    def restricted(self) -> "Rule":
        """
        The restricted form of the rule.

        Rules that already carry a condition, and rules whose premises can never
        lose variables, are returned unchanged.
        """
        if self.condition is not None or not self.loses_variables:
            return self
        name = self.restricted_name or RESTRICTED_NAMES.get(self.name, f"{self.name}'")
        return Rule(
            name,
            self.premises,
            self.conclusion,
            self.restricted_condition or self.standard_inclusion(),
        )

    def describe(self) -> str:
        text = f"{self.name}: {', '.join(p.text for p in self.premises)} / {self.conclusion.text}"
        if self.condition is not None:
            text += f"  provided {self.condition.describe()}"
        return text


@dataclass(frozen=True)
class Hypothesis:
    def describe(self) -> str:
        return "hyp"


@dataclass(frozen=True)
class AxiomInstance:
    """Axiom justification; σ is matched automatically when omitted."""

    name: str
    substitution: Optional[Substitution] = None

    def describe(self) -> str:
        if self.substitution is None or not len(self.substitution):
            return f"ax {self.name}"
        return f"ax {self.name} [{self.substitution.describe()}]"


@dataclass(frozen=True)
class RuleApplication:
    """Rule justification with 1-based premise line numbers."""

    rule: str
    premises: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))

    def describe(self) -> str:
        return " ".join([self.rule] + [str(i) for i in self.premises])


Justification = Union[Hypothesis, AxiomInstance, RuleApplication]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    """
    A justified sequence of formulas from a set of hypotheses.

    Attributes:
        lines: Proof lines; line numbers are 1-based positions
        hypotheses: Formulas the proof may cite as hypotheses
    """

    lines: Tuple[ProofLine, ...]
    hypotheses: FrozenSet[Formula] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))
        object.__setattr__(self, "hypotheses", frozenset(self.hypotheses))

    def __len__(self) -> int:
        return len(self.lines)

    @property
    def conclusion(self) -> Formula:
        if not self.lines:
            raise HilbertSystemError("An empty proof has no conclusion")
        return self.lines[-1].formula

    @property
    def hypotheses_used(self) -> FrozenSet[Formula]:
        return frozenset(
            line.formula for line in self.lines if isinstance(line.justification, Hypothesis)
        )

    @property
    def formulas(self) -> List[Formula]:
        return [line.formula for line in self.lines]


@dataclass(frozen=True)
class HilbertSystem:
    """
    A Hilbert-style presentation: named axiom schemas and rules over a language.

    Raises:
        HilbertSystemError: On duplicate names or schemas outside the language
    """

    name: str
    language: Language
    axioms: Tuple[Tuple[str, Formula], ...]
    rules: Tuple[Rule, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "axioms", tuple(self.axioms))
        object.__setattr__(self, "rules", tuple(self.rules))
        names = [n for n, _ in self.axioms] + [r.name for r in self.rules]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise HilbertSystemError(f"{self.name}: duplicate axiom/rule names {duplicates}")
        schemas: List[Tuple[str, Formula]] = list(self.axioms)
        for rule in self.rules:
            schemas.extend((rule.name, s) for s in rule.premises + (rule.conclusion,))
        for owner, schema in schemas:
            try:
                check_formula(schema, self.language)
            except FormulaError as e:
                raise HilbertSystemError(f"{self.name}: schema of {owner} is ill-formed: {e}") from e

    @classmethod
    def build(
        cls,
        name: str,
        language: Language,
        axioms: Iterable[Tuple[str, Formula]],
        rules: Sequence[Rule],
    ) -> "HilbertSystem":
        system = cls(name, language, tuple(axioms), tuple(rules))
        logger.debug(f"Built system {name}: {len(system.axioms)} axioms, {len(system.rules)} rules")
        return system

    def axiom(self, name: str) -> Formula:
        for axiom_name, schema in self.axioms:
            if axiom_name == name:
                return schema
        raise HilbertSystemError(f"{self.name} has no axiom named {name}")

    def has_axiom(self, name: str) -> bool:
        return any(axiom_name == name for axiom_name, _ in self.axioms)

    def rule(self, name: str) -> Rule:
        for rule in self.rules:
            if rule.name == name:
                return rule
        raise HilbertSystemError(f"{self.name} has no rule named {name}")

    def has_rule(self, name: str) -> bool:
        return any(rule.name == name for rule in self.rules)

    def cited_rule(self, name: str) -> Optional[Rule]:
        """
        The rule a proof line cites by name.

        A base name (R1, MP, HS) cited in a restricted system resolves to its
        restricted form (R1', RMP, RHS) so the side condition is still checked.
        """
        if self.has_rule(name):
            return self.rule(name)
        restricted_name = RESTRICTED_NAMES.get(name, f"{name}'")
        for rule in self.rules:
            if rule.name == restricted_name and rule.condition is not None:
                return rule
        return None

    @property
    def is_restricted(self) -> bool:
        """True when no rule application can lose variables."""
        return all(r.is_restricted or not r.loses_variables for r in self.rules)

    def renamed(self, name: str) -> "HilbertSystem":
        return HilbertSystem(name, self.language, self.axioms, self.rules)

    def restricted(self, name: str = "") -> "HilbertSystem":
        """Same axioms, every rule replaced by its restricted form."""
        return HilbertSystem(
            name or f"{self.name}-re",
            self.language,
            self.axioms,
            tuple(rule.restricted() for rule in self.rules),
        )

    def __str__(self) -> str:
        return self.name
