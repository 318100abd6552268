"""
Deterministic formula generators for property sweeps.
"""

import itertools
import logging
import random
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from .formula import Compound, Formula, Language, Variable

logger = logging.getLogger(__name__)


def enumerate_formulas(
    lang: Language, variables: Sequence[str], max_depth: int
) -> Iterator[Formula]:
    """
    Yield every formula over the given variables of depth at most max_depth.

    Formulas are yielded level by level, each level in (size, text) order. The
    count grows doubly exponentially with depth, so keep depth and language small.
    """
    leaves: List[Formula] = [Variable(v) for v in sorted(variables)]
    leaves.extend(Compound(symbol) for symbol in lang.nullary())
    by_depth: Dict[int, List[Formula]] = {0: sorted(leaves)}
    yield from by_depth[0]

    for depth in range(1, max_depth + 1):
        below: List[Formula] = [f for d in range(depth) for f in by_depth[d]]
        previous: Set[Formula] = set(by_depth[depth - 1])
        level: Set[Formula] = set()
        for op in lang.operators:
            if op.arity == 0:
                continue
            for args in itertools.product(below, repeat=op.arity):
                if any(a in previous for a in args):
                    level.add(Compound(op.symbol, args))
        by_depth[depth] = sorted(level)
        logger.debug(f"Enumerated {len(level)} formulas of depth {depth}")
        yield from by_depth[depth]


def random_formula(
    lang: Language,
    variables: Sequence[str],
    max_depth: int,
    rng: random.Random,
    leaf_bias: float = 0.3,
) -> Formula:
    """Draw a random formula of depth at most max_depth."""
    constants = lang.nullary()
    connectives = [op for op in lang.operators if op.arity > 0]
    if max_depth <= 0 or not connectives or rng.random() < leaf_bias:
        if constants and rng.random() < 0.1:
            return Compound(rng.choice(constants))
        return Variable(rng.choice(list(variables)))
    op = rng.choice(connectives)
    return Compound(
        op.symbol,
        [random_formula(lang, variables, max_depth - 1, rng, leaf_bias) for _ in range(op.arity)],
    )


def random_instances(
    lang: Language,
    variables: Sequence[str],
    count: int,
    rng: random.Random,
    max_premises: int = 2,
    max_depth: int = 3,
) -> List[Tuple[Tuple[Formula, ...], Formula]]:
    """Draw count (premises, conclusion) pairs; premise sets have distinct members."""
    result: List[Tuple[Tuple[Formula, ...], Formula]] = []
    for _ in range(count):
        k = rng.randint(0, max_premises)
        premises = {random_formula(lang, variables, max_depth, rng) for _ in range(k)}
        conclusion = random_formula(lang, variables, max_depth, rng)
        result.append((tuple(sorted(premises)), conclusion))
    return result
