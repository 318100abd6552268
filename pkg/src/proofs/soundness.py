"""
Soundness of a Hilbert system for a matrix.

Axiom schemas must be tautologies and unrestricted rules must preserve designation,
both checked at schema level (metavariables read as variables). A restricted rule
is checked on its instances over a small formula pool whose members satisfy the
side condition, all evaluated on one shared valuation grid.
"""

import itertools
import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..semantics.algebra import Matrix, ValuationGrid, find_countermodel
from ..syntax.formula import Compound, Formula, Substitution, Variable, apply_substitution
from .system import HilbertSystem, Rule

logger = logging.getLogger(__name__)

POOL_VARIABLES: Tuple[str, ...] = ("p", "q")


def instance_pool(matrix: Matrix, variables: Sequence[str] = POOL_VARIABLES) -> List[Formula]:
    """
    Variables, constants, each unary operator on the first variable and each
    binary operator on the first two.
    """
    lang = matrix.language
    leaves: List[Formula] = [Variable(v) for v in variables]
    pool: List[Formula] = list(leaves) + [Compound(c) for c in lang.nullary()]
    for op in lang.operators:
        if op.arity == 1:
            pool.append(Compound(op.symbol, (leaves[0],)))
        elif op.arity == 2 and len(leaves) > 1:
            pool.append(Compound(op.symbol, (leaves[0], leaves[1])))
    return pool


def _restricted_rule_violations(rule: Rule, matrix: Matrix) -> List[str]:
    assert rule.condition is not None
    pool = instance_pool(matrix)
    grid = ValuationGrid(matrix.algebra, POOL_VARIABLES)
    mask = matrix.designated_mask()
    metavariables = sorted(rule.metavariables)
    for values in itertools.product(pool, repeat=len(metavariables)):
        sigma = Substitution(dict(zip(metavariables, values)))
        if not rule.condition.holds(sigma):
            continue
        premises = [apply_substitution(sigma, p) for p in rule.premises]
        conclusion = apply_substitution(sigma, rule.conclusion)
        holds = np.ones(grid.count, dtype=bool)
        for premise in premises:
            holds &= mask[grid.values(premise)]
        bad = np.flatnonzero(holds & ~mask[grid.values(conclusion)])
        if bad.size:
            valuation = grid.valuation(int(bad[0]))
            shown = ", ".join(f"{k}={v}" for k, v in sorted(valuation.items()))
            return [f"rule {rule.name} fails on [{sigma.describe()}] at {shown}"]
    return []


def soundness_violations(matrix: Matrix, system: HilbertSystem) -> List[str]:
    """One message per axiom or rule that the matrix does not validate."""
    violations: List[str] = []
    for name, schema in system.axioms:
        witness = find_countermodel((), schema, [matrix])
        if witness is not None:
            violations.append(f"axiom {name} is not a tautology: {witness.describe()}")
    for rule in system.rules:
        if rule.condition is None:
            witness = find_countermodel(rule.premises, rule.conclusion, [matrix])
            if witness is not None:
                violations.append(f"rule {rule.name} does not preserve designation: {witness.describe()}")
        else:
            violations.extend(_restricted_rule_violations(rule, matrix))
    logger.debug(f"{system.name} over {matrix}: {len(violations)} soundness violation(s)")
    return violations


def is_model(matrix: Matrix, system: HilbertSystem) -> bool:
    """True iff the matrix validates every axiom and every rule of system."""
    return not soundness_violations(matrix, system)
