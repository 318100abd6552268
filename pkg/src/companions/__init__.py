"""
Companions Package

Left variable inclusion companions of consequence oracles, restricted rules
companions of Hilbert systems, and tooling to compare the two.

Modules:
- oracles: ConsequenceOracle, matrix/Hilbert oracles, left_companion, compare_oracles
- restricted: restricted_system and per-rule restriction reports
- instances: Instance, batch files and instance generators
- properties: Consequence-relation conditions checked on finite instances

Example Usage:
    from src.catalog import get_matrix
    from src.companions import left_companion, matrix_oracle, parse_instance

    pwk = left_companion(matrix_oracle([get_matrix("B2")]))
    instance = parse_instance("p & q |- p | q")
    print(pwk(instance.premises, instance.conclusion))   # True
"""

from .instances import (
    DEFAULT_VARIABLES,
    Instance,
    InstanceFormatError,
    enumerate_instances,
    format_instance,
    load_instances,
    parse_instance,
    sample_instances,
    save_instances,
)
from .oracles import (
    ComparisonReport,
    ComparisonRow,
    ConsequenceOracle,
    Outcome,
    Provenance,
    compare_oracles,
    hilbert_oracle,
    left_companion,
    matrix_oracle,
    semantic_left_companion,
)
from .properties import (
    PropertyViolation,
    companion_violations,
    consequence_violations,
    random_substitution,
)
from .restricted import RuleRestriction, restricted_system, rule_restrictions

__all__ = [
    "DEFAULT_VARIABLES",
    "Instance",
    "InstanceFormatError",
    "enumerate_instances",
    "format_instance",
    "load_instances",
    "parse_instance",
    "sample_instances",
    "save_instances",
    "ComparisonReport",
    "ComparisonRow",
    "ConsequenceOracle",
    "Outcome",
    "Provenance",
    "compare_oracles",
    "hilbert_oracle",
    "left_companion",
    "matrix_oracle",
    "semantic_left_companion",
    "PropertyViolation",
    "companion_violations",
    "consequence_violations",
    "random_substitution",
    "RuleRestriction",
    "restricted_system",
    "rule_restrictions",
]
