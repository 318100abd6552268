"""
Formula Algebra

Languages, formulas, substitutions and one-sided schema matching.

Formulas are immutable terms. Every node caches its canonical text, node count,
depth and variable set at construction, so equality, hashing, ordering and
variable lookups never walk the tree again. Schemas reuse the Formula type; whether
a variable is read as a metavariable depends on where the formula is used.
"""

import logging
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

logger = logging.getLogger(__name__)


class LanguageError(ValueError):
    """Raised when a language declaration is malformed."""

    pass


class FormulaError(ValueError):
    """Base class for formula construction and parsing errors."""

    pass


class UnknownOperatorError(FormulaError):
    """Raised when a formula uses an operator outside its language."""

    pass


class ArityMismatchError(FormulaError):
    """Raised when an operator is applied to the wrong number of arguments."""

    pass


# Connectives understood by the formula grammar, with their grammar arities.
GRAMMAR_ARITIES: Dict[str, int] = {
    "&": 2,
    "|": 2,
    "->": 2,
    "~": 1,
    "I": 1,
    "C": 1,
    "0": 0,
    "1": 0,
}

CONNECTIVE_NAMES: Dict[str, str] = {
    "&": "and",
    "|": "or",
    "->": "implies",
    "~": "not",
    "I": "interior",
    "C": "closure",
    "0": "bottom",
    "1": "top",
}

_SYMBOL_ORDER = list(GRAMMAR_ARITIES)

# Variable names the grammar accepts; keeps them apart from constants and connectives.
VARIABLE_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*")


def _symbol_rank(symbol: str) -> Tuple[int, str]:
    if symbol in GRAMMAR_ARITIES:
        return (_SYMBOL_ORDER.index(symbol), symbol)
    return (len(_SYMBOL_ORDER), symbol)


@dataclass(frozen=True)
class Operator:
    """An operation symbol with a fixed arity."""

    symbol: str
    arity: int
    name: str = ""

    def __post_init__(self) -> None:
        if not self.symbol:
            raise LanguageError("Operator symbol cannot be empty")
        if self.arity < 0:
            raise LanguageError(f"Operator '{self.symbol}' has negative arity {self.arity}")
        if not self.name:
            object.__setattr__(self, "name", CONNECTIVE_NAMES.get(self.symbol, self.symbol))


@dataclass(frozen=True)
class Language:
    """
    A logical language: a set of operators with pairwise distinct symbols.

    Operators are kept in a canonical order so that two languages declaring the
    same operators compare equal regardless of declaration order.
    """

    operators: Tuple[Operator, ...]

    def __post_init__(self) -> None:
        seen: Dict[str, int] = {}
        for op in self.operators:
            if op.symbol in seen:
                raise LanguageError(f"Duplicate operator symbol '{op.symbol}'")
            seen[op.symbol] = op.arity
        ordered = tuple(sorted(self.operators, key=lambda op: _symbol_rank(op.symbol)))
        object.__setattr__(self, "operators", ordered)

    @classmethod
    def from_symbols(cls, *symbols: str) -> "Language":
        """Build a language from grammar connectives using their grammar arities."""
        ops = []
        for symbol in symbols:
            if symbol not in GRAMMAR_ARITIES:
                raise LanguageError(f"'{symbol}' is not a grammar connective; give its arity")
            ops.append(Operator(symbol, GRAMMAR_ARITIES[symbol]))
        return cls(tuple(ops))

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(op.symbol for op in self.operators)

    def has(self, symbol: str) -> bool:
        return any(op.symbol == symbol for op in self.operators)

    def __contains__(self, symbol: object) -> bool:
        return isinstance(symbol, str) and self.has(symbol)

    def arity(self, symbol: str) -> int:
        for op in self.operators:
            if op.symbol == symbol:
                return op.arity
        raise UnknownOperatorError(f"Operator '{symbol}' is not in the language {self}")

    def nullary(self) -> Tuple[str, ...]:
        """Nullary symbols in lexicographic order."""
        return tuple(sorted(op.symbol for op in self.operators if op.arity == 0))

    def restrict(self, symbols: Iterable[str]) -> "Language":
        """The reduct language keeping only the given symbols."""
        wanted = set(symbols)
        missing = wanted - set(self.symbols)
        if missing:
            raise UnknownOperatorError(
                f"Cannot restrict {self} to missing operators {sorted(missing)}"
            )
        return Language(tuple(op for op in self.operators if op.symbol in wanted))

    def union(self, other: "Language") -> "Language":
        merged: Dict[str, Operator] = {op.symbol: op for op in self.operators}
        for op in other.operators:
            if op.symbol in merged and merged[op.symbol].arity != op.arity:
                raise LanguageError(
                    f"Operator '{op.symbol}' has arity {merged[op.symbol].arity} "
                    f"and {op.arity} in the merged languages"
                )
            merged.setdefault(op.symbol, op)
        return Language(tuple(merged.values()))

    def __str__(self) -> str:
        return "{" + ", ".join(self.symbols) + "}"


class Formula:
    """
    Base class of formulas: a variable or an operator application.

    Equality and hashing use the canonical text, which is injective on formulas.
    Ordering is by (size, text) and gives the deterministic candidate order used
    by search and enumeration.
    """

    __slots__ = ("text", "size", "depth", "variables", "_hash")

    text: str
    size: int
    depth: int
    variables: FrozenSet[str]
    _hash: int

    def _freeze(self, text: str, size: int, depth: int, variables: FrozenSet[str]) -> None:
        object.__setattr__(self, "text", text)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "depth", depth)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_hash", hash(text))

    def __setattr__(self, key: str, value: object) -> None:
        raise AttributeError("Formula objects are immutable")

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Formula):
            return NotImplemented
        return self._hash == other._hash and self.text == other.text

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Formula") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> Tuple[int, str]:
        return (self.size, self.text)

    @property
    def operator(self) -> Optional[str]:
        """Top operator symbol, or None for a variable."""
        return None

    @property
    def args(self) -> Tuple["Formula", ...]:
        return ()

    @property
    def is_variable(self) -> bool:
        return False

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.text!r})"


class Variable(Formula):
    """A propositional variable (or, inside a schema, a metavariable)."""

    __slots__ = ("name",)

    name: str

    def __init__(self, name: str) -> None:
        if not name:
            raise FormulaError("Variable name cannot be empty")
        if not VARIABLE_NAME.fullmatch(name):
            raise FormulaError(f"Invalid variable name '{name}': expected [a-z][a-zA-Z0-9_]*")
        object.__setattr__(self, "name", name)
        self._freeze(name, 1, 0, frozenset((name,)))

    @property
    def is_variable(self) -> bool:
        return True


class Compound(Formula):
    """An operator applied to argument formulas."""

    __slots__ = ("op", "_args")

    op: str
    _args: Tuple[Formula, ...]

    def __init__(self, op: str, args: Sequence[Formula] = ()) -> None:
        args = tuple(args)
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "_args", args)
        if not args:
            variables: FrozenSet[str] = frozenset()
        elif len(args) == 1:
            variables = args[0].variables
        else:
            variables = frozenset().union(*(a.variables for a in args))
        self._freeze(
            _render(op, args),
            1 + sum(a.size for a in args),
            1 + max((a.depth for a in args), default=-1),
            variables,
        )

    @property
    def operator(self) -> Optional[str]:
        return self.op

    @property
    def args(self) -> Tuple[Formula, ...]:
        return self._args


def _render(op: str, args: Tuple[Formula, ...]) -> str:
    if not args:
        return op
    if len(args) == 1:
        if op.isalpha():
            return f"{op} {args[0].text}"
        return f"({op}{args[0].text})"
    if len(args) == 2:
        return f"({args[0].text} {op} {args[1].text})"
    return f"{op}(" + ", ".join(a.text for a in args) + ")"


def var(name: str) -> Variable:
    return Variable(name)


def app(op: str, *args: Formula) -> Compound:
    return Compound(op, args)


def check_formula(f: Formula, lang: Language) -> None:
    """
    Validate that every operator of f belongs to lang with matching arity.

    Raises:
        UnknownOperatorError: If an operator is not in the language
        ArityMismatchError: If an operator is applied to the wrong number of arguments
    """
    stack: List[Formula] = [f]
    while stack:
        node = stack.pop()
        if node.is_variable:
            continue
        symbol = node.operator
        assert symbol is not None
        if not lang.has(symbol):
            raise UnknownOperatorError(f"Operator '{symbol}' in {node} is not in the language {lang}")
        expected = lang.arity(symbol)
        if expected != len(node.args):
            raise ArityMismatchError(
                f"Operator '{symbol}' takes {expected} argument(s) but {len(node.args)} given in {node}"
            )
        stack.extend(node.args)


def variables_of(formulas: Iterable[Formula]) -> FrozenSet[str]:
    """Union of the variables of all given formulas."""
    result: FrozenSet[str] = frozenset()
    for f in formulas:
        result = result | f.variables
    return result


def formula_size(f: Formula) -> int:
    return f.size


def formula_depth(f: Formula) -> int:
    return f.depth


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield every subformula of f (with repetitions for shared subterms), root first."""
    stack: List[Formula] = [f]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.args))


@dataclass(frozen=True)
class Substitution:
    """
    A finite map from variable names to formulas, the identity elsewhere.

    Applying a substitution is the homomorphic extension of the map to all formulas.
    """

    mapping: Mapping[str, Formula] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", MappingProxyType(dict(self.mapping)))

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return dict(self.mapping) == dict(other.mapping)

    def __getitem__(self, name: str) -> Formula:
        return self.mapping.get(name, Variable(name))

    def __len__(self) -> int:
        return len(self.mapping)

    @property
    def domain(self) -> FrozenSet[str]:
        return frozenset(self.mapping)

    def items(self) -> List[Tuple[str, Formula]]:
        return sorted(self.mapping.items())

    def apply(self, f: Formula) -> Formula:
        return apply_substitution(self, f)

    def restrict(self, names: Iterable[str]) -> "Substitution":
        keep = set(names)
        return Substitution({k: v for k, v in self.mapping.items() if k in keep})

    def describe(self) -> str:
        """Render as `alpha=p, beta=(q -> r)` in name order."""
        return ", ".join(f"{name}={value.text}" for name, value in self.items())

    @classmethod
    def identity(cls) -> "Substitution":
        return cls({})


def apply_substitution(sigma: Substitution, f: Formula) -> Formula:
    """Homomorphic image of f under sigma."""
    if not sigma.mapping or f.variables.isdisjoint(sigma.mapping):
        return f
    if f.is_variable:
        return sigma[f.text]
    assert f.operator is not None
    return Compound(f.operator, [apply_substitution(sigma, a) for a in f.args])


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """The substitution applying inner first and outer second."""
    mapping: Dict[str, Formula] = {
        name: apply_substitution(outer, value) for name, value in inner.mapping.items()
    }
    for name, value in outer.mapping.items():
        mapping.setdefault(name, value)
    return Substitution(mapping)


def _match_into(schema: Formula, target: Formula, bindings: Dict[str, Formula]) -> bool:
    stack: List[Tuple[Formula, Formula]] = [(schema, target)]
    while stack:
        s, t = stack.pop()
        if s.is_variable:
            bound = bindings.get(s.text)
            if bound is None:
                bindings[s.text] = t
            elif bound != t:
                return False
            continue
        if s.operator != t.operator or len(s.args) != len(t.args):
            return False
        if s.size > t.size:
            return False
        stack.extend(zip(s.args, t.args))
    return True


def match_schema(
    schema: Formula,
    target: Formula,
    bindings: Optional[Mapping[str, Formula]] = None,
) -> Optional[Substitution]:
    """
    One-sided first-order matching of a schema against a concrete formula.

    Args:
        schema: Formula whose variables are read as metavariables
        target: Formula to match
        bindings: Metavariable bindings that the match must extend

    Returns:
        The minimal substitution over the schema's metavariables (plus the given
        bindings) mapping schema to target, or None if there is none
    """
    work: Dict[str, Formula] = dict(bindings or {})
    if not _match_into(schema, target, work):
        return None
    return Substitution(work)


def match_all(
    schemas: Sequence[Formula],
    targets: Sequence[Formula],
    bindings: Optional[Mapping[str, Formula]] = None,
) -> Optional[Substitution]:
    """Match several schemas against several targets with one shared substitution."""
    if len(schemas) != len(targets):
        return None
    work: Dict[str, Formula] = dict(bindings or {})
    for schema, target in zip(schemas, targets):
        if not _match_into(schema, target, work):
            return None
    return Substitution(work)


# Standard languages
MINIMAL = Language.from_symbols("&", "|")
LATTICE = Language.from_symbols("&", "|", "0", "1")
QUASI_BOOLEAN = Language.from_symbols("&", "|", "~", "0", "1")
HEYTING = Language.from_symbols("&", "|", "->", "~", "0", "1")
PRE_ROUGH = Language.from_symbols("&", "|", "->", "~", "I", "C", "0", "1")
RM3_LANGUAGE = Language.from_symbols("&", "|", "->", "~")
