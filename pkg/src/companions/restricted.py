"""
Restricted rules companion of a Hilbert system.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from ..proofs.system import HilbertSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RuleRestriction:
    """How one rule fares under restriction."""

    original: str
    restricted: str
    condition: str
    changed: bool

    def describe(self) -> str:
        if not self.changed:
            return f"{self.original}: unchanged"
        return f"{self.original} -> {self.restricted}: provided {self.condition}"


def rule_restrictions(system: HilbertSystem) -> List[RuleRestriction]:
    """One entry per rule of system, in order."""
    entries = []
    for rule in system.rules:
        restricted = rule.restricted()
        changed = restricted is not rule
        entries.append(
            RuleRestriction(
                rule.name,
                restricted.name,
                restricted.condition.describe() if restricted.condition else "",
                changed,
            )
        )
    return entries


def restricted_system(system: HilbertSystem, name: Optional[str] = None) -> HilbertSystem:
    """
    S^re: the axioms of system and each rule limited to variable-including applications.

    Rules that can never lose variables, and rules already carrying a side
    condition, are kept unchanged.
    """
    result = system.restricted(name or "")
    for entry in rule_restrictions(system):
        logger.debug(f"{result.name}: {entry.describe()}")
    logger.info(f"Built restricted system {result.name} from {system.name}")
    return result
