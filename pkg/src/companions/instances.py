"""
Consequence instances and instance batch files.

A batch file holds one instance per line:

    p & q |- p | q
    p ; ~p |- q
    |- p -> p

Premises are separated by `;`, the conclusion follows `|-`. Lines starting with
`#` and blank lines are skipped.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..syntax.formula import Formula, FormulaError, Language, variables_of
from ..syntax.generate import enumerate_formulas, random_instances
from ..syntax.parser import parse_formula

logger = logging.getLogger(__name__)

TURNSTILE = "|-"
DEFAULT_VARIABLES: Tuple[str, ...] = ("p", "q", "r")


class InstanceFormatError(ValueError):
    """Raised when an instance line cannot be parsed."""

    def __init__(self, message: str, line: int = 0) -> None:
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Instance:
    """A finite premise set and a conclusion."""

    premises: Tuple[Formula, ...]
    conclusion: Formula

    def __post_init__(self) -> None:
        object.__setattr__(self, "premises", tuple(self.premises))

    @property
    def variables(self) -> FrozenSet[str]:
        return variables_of(self.premises + (self.conclusion,))

    def __str__(self) -> str:
        return format_instance(self)


def parse_instance(text: str, lang: Optional[Language] = None, line: int = 0) -> Instance:
    """
    Parse `<premise> ; <premise> |- <conclusion>`.

    Raises:
        InstanceFormatError: If the turnstile is missing or a formula is malformed
    """
    left, sep, right = text.partition(TURNSTILE)
    if not sep:
        raise InstanceFormatError(f"missing '{TURNSTILE}' in {text.strip()!r}", line)
    try:
        premises = tuple(parse_formula(p, lang) for p in left.split(";") if p.strip())
        conclusion = parse_formula(right, lang)
    except FormulaError as e:
        raise InstanceFormatError(str(e), line) from e
    return Instance(premises, conclusion)


def format_instance(instance: Instance) -> str:
    premises = " ; ".join(p.text for p in instance.premises)
    return f"{premises} {TURNSTILE} {instance.conclusion.text}".lstrip()


def load_instances(path: Path, lang: Optional[Language] = None) -> List[Instance]:
    instances = []
    text = Path(path).read_text(encoding="utf-8")
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        instances.append(parse_instance(stripped, lang, number))
    logger.info(f"Loaded {len(instances)} instances from {path}")
    return instances


def save_instances(instances: Iterable[Instance], path: Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("".join(format_instance(i) + "\n" for i in instances), encoding="utf-8")


def sample_instances(
    lang: Language,
    count: int,
    seed: int,
    variables: Sequence[str] = DEFAULT_VARIABLES,
    max_premises: int = 2,
    max_depth: int = 3,
) -> List[Instance]:
    """Seeded random instances: at most max_premises premises, formulas of depth ≤ max_depth."""
    rng = random.Random(seed)
    drawn = random_instances(lang, variables, count, rng, max_premises, max_depth)
    return [Instance(premises, conclusion) for premises, conclusion in drawn]


def enumerate_instances(
    lang: Language,
    variables: Sequence[str],
    max_depth: int,
    max_premises: int = 1,
) -> Iterator[Instance]:
    """
    Every instance whose premises and conclusion are formulas of depth ≤ max_depth.

    Premise sets are combinations (no repeats) of at most max_premises formulas.
    """
    formulas = list(enumerate_formulas(lang, variables, max_depth))
    for k in range(max_premises + 1):
        for premises in itertools.combinations(formulas, k):
            for conclusion in formulas:
                yield Instance(premises, conclusion)
