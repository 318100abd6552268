"""
Finite Algebras and Logical Matrices

Operation tables over a finite universe, logical matrices, valuations and
matrix-defined consequence.

Consequence quantifies over valuations of exactly the variables occurring in the
premises and conclusion. All valuations are evaluated at once: each variable becomes
a numpy index array over the |universe|^k valuation grid (C order, so the first
variable in sorted order is the most significant, matching itertools.product), and
each operator application is a single table look-up over those arrays.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from ..syntax.formula import Formula, FormulaError, Language, check_formula, variables_of

logger = logging.getLogger(__name__)

OMEGA = "w"

# Assignment of universe labels to variable names.
Valuation = Mapping[str, str]


class AlgebraError(ValueError):
    """Raised when operation tables or designated sets are malformed."""

    pass


class EvaluationError(ValueError):
    """Raised on unassigned variables or language mismatches during evaluation."""

    pass


@dataclass(frozen=True)
class FiniteAlgebra:
    """
    A finite algebra given by operation tables.

    Tables are stored per operator symbol as flat row-major tuples of element
    indices over the universe ordering; a nullary operator has a one-entry table.

    Attributes:
        language: Operators interpreted by the algebra
        universe: Ordered element labels
        tables: Flat row-major table per operator symbol
        name: Display name (ignored by equality)
    """

    language: Language
    universe: Tuple[str, ...]
    tables: Mapping[str, Tuple[int, ...]]
    name: str = field(default="", compare=False)
    _arrays: Dict[str, np.ndarray] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "tables", {k: tuple(v) for k, v in self.tables.items()})
        n = len(self.universe)
        if n == 0:
            raise AlgebraError("Universe cannot be empty")
        if len(set(self.universe)) != n:
            raise AlgebraError(f"Universe labels are not distinct: {self.universe}")
        for op in self.language.operators:
            table = self.tables.get(op.symbol)
            if table is None:
                raise AlgebraError(f"Missing table for operator '{op.symbol}'")
            if len(table) != n ** op.arity:
                raise AlgebraError(
                    f"Table for '{op.symbol}' has {len(table)} entries, "
                    f"expected {n ** op.arity}"
                )
            if any(not 0 <= value < n for value in table):
                raise AlgebraError(f"Table for '{op.symbol}' leaves the universe")
        extra = set(self.tables) - set(self.language.symbols)
        if extra:
            raise AlgebraError(f"Tables given for operators outside the language: {sorted(extra)}")

    def __hash__(self) -> int:
        return hash((self.language, self.universe, tuple(sorted(self.tables.items()))))

    @classmethod
    def from_tables(
        cls,
        language: Language,
        universe: Sequence[str],
        tables: Mapping[str, Any],
        name: str = "",
        allow_omega: bool = False,
    ) -> "FiniteAlgebra":
        """
        Build an algebra from nested label tables.

        Args:
            language: Operators to interpret
            universe: Ordered element labels; the reserved label "w" is rejected
            tables: Per symbol, a label (nullary), a list of labels (unary) or nested
                row-major lists of labels (higher arities)
            name: Display name
            allow_omega: Accept the reserved label (stored contaminated extensions)

        Raises:
            AlgebraError: If a table is missing, partial or not closed in the universe
        """
        if OMEGA in universe and not allow_omega:
            raise AlgebraError(f"The label '{OMEGA}' is reserved for the contaminating element")
        index = {label: i for i, label in enumerate(universe)}
        flat: Dict[str, Tuple[int, ...]] = {}
        for op in language.operators:
            if op.symbol not in tables:
                raise AlgebraError(f"Missing table for operator '{op.symbol}'")
            labels = _flatten(tables[op.symbol], op.arity, len(universe), op.symbol)
            try:
                flat[op.symbol] = tuple(index[label] for label in labels)
            except KeyError as e:
                raise AlgebraError(
                    f"Table for '{op.symbol}' uses {e.args[0]!r} outside the universe"
                ) from e
        return cls(language, tuple(universe), flat, name)

    @property
    def size(self) -> int:
        return len(self.universe)

    def index(self, label: str) -> int:
        try:
            return self.universe.index(label)
        except ValueError as e:
            raise AlgebraError(f"{label!r} is not an element of {self.name or 'the algebra'}") from e

    def apply(self, symbol: str, *args: int) -> int:
        """Apply an operation to element indices."""
        table = self.tables[symbol]
        n = len(self.universe)
        offset = 0
        for a in args:
            offset = offset * n + a
        return table[offset]

    def operate(self, symbol: str, *labels: str) -> str:
        """Apply an operation to element labels."""
        return self.universe[self.apply(symbol, *(self.index(label) for label in labels))]

    def array(self, symbol: str) -> np.ndarray:
        """The table of symbol as an ndarray of shape (n,) * arity."""
        cached = self._arrays.get(symbol)
        if cached is None:
            arity = self.language.arity(symbol)
            cached = np.array(self.tables[symbol], dtype=np.intp).reshape((self.size,) * arity)
            self._arrays[symbol] = cached
        return cached

    def nested_table(self, symbol: str) -> Any:
        """The table of symbol as nested label lists (inverse of from_tables)."""
        arity = self.language.arity(symbol)
        labels = [self.universe[i] for i in self.tables[symbol]]
        return _nest(labels, arity, self.size)

    def reduct(self, symbols: Iterable[str]) -> "FiniteAlgebra":
        language = self.language.restrict(symbols)
        return FiniteAlgebra(
            language,
            self.universe,
            {s: self.tables[s] for s in language.symbols},
            self.name,
        )

    def relabel(self, labels: Sequence[str], name: Optional[str] = None) -> "FiniteAlgebra":
        """Same tables under new element labels (position-wise)."""
        if len(labels) != self.size:
            raise AlgebraError(f"Expected {self.size} labels, got {len(labels)}")
        return FiniteAlgebra(self.language, tuple(labels), self.tables, name or self.name)

    def __str__(self) -> str:
        return self.name or f"algebra of size {self.size}"


def _flatten(table: Any, arity: int, n: int, symbol: str) -> List[str]:
    if arity == 0:
        if isinstance(table, (list, tuple)):
            if len(table) != 1:
                raise AlgebraError(f"Nullary table for '{symbol}' must hold one element")
            return [str(table[0])]
        return [str(table)]
    if not isinstance(table, (list, tuple)) or len(table) != n:
        raise AlgebraError(f"Table for '{symbol}' is not total over the universe")
    if arity == 1:
        return [str(x) for x in table]
    result: List[str] = []
    for row in table:
        result.extend(_flatten(row, arity - 1, n, symbol))
    return result


def _nest(labels: List[str], arity: int, n: int) -> Any:
    if arity == 0:
        return labels[0]
    if arity == 1:
        return list(labels)
    step = n ** (arity - 1)
    return [_nest(labels[i * step:(i + 1) * step], arity - 1, n) for i in range(n)]


@dataclass(frozen=True)
class Matrix:
    """A logical matrix: an algebra with a designated subset of its universe."""

    algebra: FiniteAlgebra
    designated: FrozenSet[str]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "designated", frozenset(self.designated))
        outside = self.designated - set(self.algebra.universe)
        if outside:
            raise AlgebraError(f"Designated values {sorted(outside)} are not in the universe")
        if not self.name:
            object.__setattr__(self, "name", self.algebra.name)

    @property
    def language(self) -> Language:
        return self.algebra.language

    def designated_mask(self) -> np.ndarray:
        return np.array([label in self.designated for label in self.algebra.universe], dtype=bool)

    def __str__(self) -> str:
        designated = ",".join(l for l in self.algebra.universe if l in self.designated)
        return f"<{self.name or self.algebra}, {{{designated}}}>"


@dataclass(frozen=True)
class Countermodel:
    """A matrix and valuation designating every premise but not the conclusion."""

    matrix: Matrix
    valuation: Dict[str, str]

    def describe(self) -> str:
        assigned = ", ".join(f"{k}={v}" for k, v in sorted(self.valuation.items()))
        return f"{self.matrix}: {assigned}"


def _check_language(formulas: Iterable[Formula], lang: Language) -> None:
    try:
        for f in formulas:
            check_formula(f, lang)
    except FormulaError as e:
        raise EvaluationError(f"Language mismatch: {e}") from e


def evaluate(f: Formula, v: Valuation, algebra: FiniteAlgebra) -> str:
    """
    Value of f in algebra under the valuation v.

    Raises:
        EvaluationError: If a variable of f is unassigned, an assigned label lies
            outside the universe, or f uses an operator the algebra lacks
    """
    _check_language([f], algebra.language)
    missing = f.variables - set(v)
    if missing:
        raise EvaluationError(f"Unassigned variable(s) {sorted(missing)} in {f}")
    assignment: Dict[str, int] = {}
    for name in f.variables:
        label = v[name]
        if label not in algebra.universe:
            raise EvaluationError(f"{label!r} assigned to {name} is not in {algebra}")
        assignment[name] = algebra.universe.index(label)
    return algebra.universe[_evaluate_index(f, assignment, algebra)]


def _evaluate_index(f: Formula, assignment: Mapping[str, int], algebra: FiniteAlgebra) -> int:
    if f.is_variable:
        return assignment[f.text]
    assert f.operator is not None
    return algebra.apply(f.operator, *(_evaluate_index(a, assignment, algebra) for a in f.args))


class ValuationGrid:
    """
    All valuations of a variable tuple into one algebra, evaluated in bulk.

    Formula values are numpy arrays of element indices, one entry per valuation.
    """

    def __init__(self, algebra: FiniteAlgebra, variables: Sequence[str]) -> None:
        self.algebra = algebra
        self.variables = tuple(variables)
        k = len(self.variables)
        self.shape = (algebra.size,) * k
        self.count = algebra.size ** k
        if k:
            coords = np.indices(self.shape).reshape(k, -1)
            self._leaves = {name: coords[i] for i, name in enumerate(self.variables)}
        else:
            self._leaves = {}
        self._cache: Dict[Formula, np.ndarray] = {}

    def values(self, f: Formula) -> np.ndarray:
        cached = self._cache.get(f)
        if cached is not None:
            return cached
        if f.is_variable:
            result = self._leaves[f.text]
        else:
            assert f.operator is not None
            table = self.algebra.array(f.operator)
            if not f.args:
                result = np.full(self.count, int(table[()]), dtype=np.intp)
            else:
                result = table[tuple(self.values(a) for a in f.args)]
        self._cache[f] = result
        return result

    def valuation(self, position: int) -> Dict[str, str]:
        if not self.variables:
            return {}
        coords = np.unravel_index(position, self.shape)
        return {
            name: self.algebra.universe[int(c)] for name, c in zip(self.variables, coords)
        }


def _failures(
    premises: Sequence[Formula], conclusion: Formula, matrix: Matrix
) -> Tuple[ValuationGrid, np.ndarray]:
    variables = sorted(variables_of(list(premises) + [conclusion]))
    grid = ValuationGrid(matrix.algebra, variables)
    mask = matrix.designated_mask()
    holds = np.ones(grid.count, dtype=bool)
    for premise in premises:
        holds &= mask[grid.values(premise)]
    bad = holds & ~mask[grid.values(conclusion)]
    return grid, bad


def find_countermodel(
    premises: Iterable[Formula], conclusion: Formula, matrices: Sequence[Matrix]
) -> Optional[Countermodel]:
    """
    First valuation (matrix order, then valuation order) refuting premises ⊨ conclusion.

    Returns:
        The countermodel, or None when the consequence holds in every matrix
    """
    premise_list = sorted(set(premises))
    for matrix in matrices:
        _check_language(premise_list + [conclusion], matrix.language)
        grid, bad = _failures(premise_list, conclusion, matrix)
        hits = np.flatnonzero(bad)
        if hits.size:
            return Countermodel(matrix, grid.valuation(int(hits[0])))
    return None


def consequence(
    premises: Iterable[Formula], conclusion: Formula, matrices: Sequence[Matrix]
) -> bool:
    """True iff every valuation designating all premises designates the conclusion."""
    return find_countermodel(premises, conclusion, matrices) is None


def is_tautology(f: Formula, matrices: Sequence[Matrix]) -> bool:
    return consequence((), f, matrices)


def truth_table(f: Formula, algebra: FiniteAlgebra) -> List[Tuple[Dict[str, str], str]]:
    """Every valuation of f's variables (in enumeration order) with the value of f."""
    _check_language([f], algebra.language)
    grid = ValuationGrid(algebra, sorted(f.variables))
    values = grid.values(f)
    return [
        (grid.valuation(i), algebra.universe[int(values[i])]) for i in range(grid.count)
    ]


def homomorphism_witness(
    mapping: Mapping[str, str], source: FiniteAlgebra, target: FiniteAlgebra
) -> Optional[str]:
    """
    Describe the first operation the map fails to commute with, if any.

    Raises:
        AlgebraError: If the map is partial, leaves the target universe, or the
            algebras have different languages
    """
    if source.language != target.language:
        raise AlgebraError(
            f"Language mismatch: {source.language} versus {target.language}"
        )
    missing = [a for a in source.universe if a not in mapping]
    if missing:
        raise AlgebraError(f"Map is partial: no image for {missing}")
    outside = sorted({b for b in mapping.values() if b not in target.universe})
    if outside:
        raise AlgebraError(f"Map images {outside} are not in {target}")
    image = [target.universe.index(mapping[a]) for a in source.universe]
    for op in source.language.operators:
        for args in itertools.product(range(source.size), repeat=op.arity):
            lhs = image[source.apply(op.symbol, *args)]
            rhs = target.apply(op.symbol, *(image[a] for a in args))
            if lhs != rhs:
                shown = ", ".join(source.universe[a] for a in args)
                return (
                    f"f({op.symbol}({shown})) = {target.universe[lhs]} but "
                    f"{op.symbol}(f(...)) = {target.universe[rhs]}"
                )
    return None


def is_homomorphism(
    mapping: Mapping[str, str], source: FiniteAlgebra, target: FiniteAlgebra
) -> bool:
    return homomorphism_witness(mapping, source, target) is None


def trivial_algebra(lang: Language) -> FiniteAlgebra:
    """The one-element algebra of lang, whose single element is the contaminating label."""
    return FiniteAlgebra(lang, (OMEGA,), {op.symbol: (0,) for op in lang.operators}, name="1")


def trivial_matrix(lang: Language) -> Matrix:
    return Matrix(trivial_algebra(lang), frozenset((OMEGA,)), name="1")
