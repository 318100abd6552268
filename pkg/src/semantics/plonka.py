"""
Directed systems and Płonka sums.

A directed system is a finite join-semilattice of indices, an algebra (or matrix)
per index, and a homomorphism f_ij for every pair i ≤ j. Its Płonka sum has the
disjoint union of the universes; an operation applied to elements from A_i1..A_in
is computed in A_j for j = i1 ∨ ... ∨ in after pushing each argument along f_ikj.
Nullary operations take their value in the algebra at the bottom index.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..syntax.formula import Language
from .algebra import (
    OMEGA,
    AlgebraError,
    FiniteAlgebra,
    Matrix,
    homomorphism_witness,
    trivial_matrix,
)

logger = logging.getLogger(__name__)

HomMap = Mapping[str, str]


class DirectedSystemError(ValueError):
    """Raised when summing an invalid directed system."""

    pass


@dataclass(frozen=True)
class Violation:
    """One failed directed-system condition with its witness."""

    kind: str
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.message}"


@dataclass(frozen=True)
class SemilatticeIndex:
    """A finite join-semilattice given by its join table."""

    elements: Tuple[str, ...]
    join: Mapping[Tuple[str, str], str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "join", dict(self.join))

    def __hash__(self) -> int:
        return hash((self.elements, tuple(sorted(self.join.items()))))

    @classmethod
    def from_rows(cls, elements: Sequence[str], rows: Sequence[Sequence[str]]) -> "SemilatticeIndex":
        """Build from a row-major join table over the element order."""
        table = {
            (a, b): rows[i][j]
            for i, a in enumerate(elements)
            for j, b in enumerate(elements)
        }
        return cls(tuple(elements), table)

    @classmethod
    def chain(cls, elements: Sequence[str]) -> "SemilatticeIndex":
        """The chain elements[0] < elements[1] < ..."""
        position = {e: i for i, e in enumerate(elements)}
        table = {
            (a, b): a if position[a] >= position[b] else b
            for a in elements
            for b in elements
        }
        return cls(tuple(elements), table)

    def rows(self) -> List[List[str]]:
        return [[self.join[(a, b)] for b in self.elements] for a in self.elements]

    def join_of(self, items: Sequence[str]) -> str:
        result = items[0]
        for item in items[1:]:
            result = self.join[(result, item)]
        return result

    def le(self, a: str, b: str) -> bool:
        return self.join.get((a, b)) == b

    def bottom(self) -> Optional[str]:
        for b in self.elements:
            if all(self.join.get((b, i)) == i for i in self.elements):
                return b
        return None

    def violations(self) -> List[Violation]:
        result: List[Violation] = []
        elements = self.elements
        if not elements:
            return [Violation("semilattice", "index is empty")]
        for a, b in itertools.product(elements, repeat=2):
            value = self.join.get((a, b))
            if value is None or value not in elements:
                result.append(Violation("semilattice", f"join({a}, {b}) is undefined or outside the index"))
        if result:
            return result
        for a in elements:
            if self.join[(a, a)] != a:
                result.append(Violation("semilattice", f"join is not idempotent at {a}"))
        for a, b in itertools.product(elements, repeat=2):
            if self.join[(a, b)] != self.join[(b, a)]:
                result.append(Violation("semilattice", f"join is not commutative at ({a}, {b})"))
        for a, b, c in itertools.product(elements, repeat=3):
            if self.join[(self.join[(a, b)], c)] != self.join[(a, self.join[(b, c)])]:
                result.append(Violation("semilattice", f"join is not associative at ({a}, {b}, {c})"))
                break
        return result


@dataclass(frozen=True)
class DirectedSystemOfAlgebras:
    """Semilattice-indexed algebras with homomorphisms f_ij for i ≤ j."""

    index: SemilatticeIndex
    algebras: Mapping[str, FiniteAlgebra]
    homs: Mapping[Tuple[str, str], HomMap] = field(default_factory=dict)
    name: str = ""

    def members(self) -> Mapping[str, FiniteAlgebra]:
        return self.algebras

    def hom(self, i: str, j: str) -> Optional[HomMap]:
        """f_ij as given, the identity for i = j when omitted, else None."""
        given = self.homs.get((i, j))
        if given is not None:
            return given
        if i == j and i in self.algebras:
            return {a: a for a in self.algebras[i].universe}
        return None


@dataclass(frozen=True)
class DirectedSystemOfMatrices:
    """Semilattice-indexed matrices with homomorphisms that preserve designation."""

    index: SemilatticeIndex
    matrices: Mapping[str, Matrix]
    homs: Mapping[Tuple[str, str], HomMap] = field(default_factory=dict)
    name: str = ""

    def algebra_system(self) -> DirectedSystemOfAlgebras:
        return DirectedSystemOfAlgebras(
            self.index,
            {i: m.algebra for i, m in self.matrices.items()},
            self.homs,
            self.name,
        )

    def hom(self, i: str, j: str) -> Optional[HomMap]:
        return self.algebra_system().hom(i, j)


DirectedSystem = Union[DirectedSystemOfAlgebras, DirectedSystemOfMatrices]


def _as_algebras(system: DirectedSystem) -> DirectedSystemOfAlgebras:
    if isinstance(system, DirectedSystemOfMatrices):
        return system.algebra_system()
    return system


def validate_directed_system(system: DirectedSystem) -> List[Violation]:
    """
    Check every directed-system condition.

    Returns:
        Empty list when the system is valid, otherwise one Violation per failed
        condition with a witness (kinds: semilattice, members, language, bottom,
        missing, homomorphism, identity, composition, designated)
    """
    algebras = _as_algebras(system)
    index = algebras.index
    result = index.violations()
    if result:
        return result

    if set(algebras.algebras) != set(index.elements):
        result.append(
            Violation(
                "members",
                f"index elements {sorted(index.elements)} but members for {sorted(algebras.algebras)}",
            )
        )
        return result

    languages = {a.language for a in algebras.algebras.values()}
    if len(languages) > 1:
        result.append(Violation("language", "members do not share one language"))
        return result
    lang = next(iter(languages))
    if lang.nullary() and index.bottom() is None:
        result.append(
            Violation("bottom", f"nullary operators {list(lang.nullary())} need a bottom index")
        )

    for i, j in itertools.product(index.elements, repeat=2):
        if not index.le(i, j):
            continue
        source, target = algebras.algebras[i], algebras.algebras[j]
        f = algebras.hom(i, j)
        if f is None:
            result.append(Violation("missing", f"no homomorphism f_{i}{j} for {i} ≤ {j}"))
            continue
        try:
            witness = homomorphism_witness(f, source, target)
        except AlgebraError as e:
            result.append(Violation("homomorphism", f"f_{i}{j}: {e}"))
            continue
        if witness is not None:
            result.append(Violation("homomorphism", f"f_{i}{j} is not a homomorphism: {witness}"))
        if i == j:
            moved = [a for a in source.universe if f[a] != a]
            if moved:
                result.append(
                    Violation("identity", f"f_{i}{i} is not the identity: {moved[0]} ↦ {f[moved[0]]}")
                )
    if any(v.kind in ("missing", "homomorphism") for v in result):
        return result

    for i, j, k in itertools.product(index.elements, repeat=3):
        if not (index.le(i, j) and index.le(j, k)):
            continue
        f_ij, f_jk, f_ik = algebras.hom(i, j), algebras.hom(j, k), algebras.hom(i, k)
        assert f_ij is not None and f_jk is not None and f_ik is not None
        for a in algebras.algebras[i].universe:
            if f_jk[f_ij[a]] != f_ik[a]:
                result.append(
                    Violation(
                        "composition",
                        f"f_{i}{k}({a}) = {f_ik[a]} but f_{j}{k}(f_{i}{j}({a})) = {f_jk[f_ij[a]]} "
                        f"for the triple ({i}, {j}, {k})",
                    )
                )
                break

    if isinstance(system, DirectedSystemOfMatrices):
        for i, j in itertools.product(index.elements, repeat=2):
            if not index.le(i, j):
                continue
            f = algebras.hom(i, j)
            assert f is not None
            lost = [
                a for a in system.matrices[i].designated if f[a] not in system.matrices[j].designated
            ]
            if lost:
                result.append(
                    Violation(
                        "designated",
                        f"f_{i}{j} maps designated {sorted(lost)[0]} outside F_{j}",
                    )
                )
    return result


def _global_labels(algebras: DirectedSystemOfAlgebras) -> Dict[Tuple[str, str], str]:
    labels = [(i, a) for i in algebras.index.elements for a in algebras.algebras[i].universe]
    plain = [a for _, a in labels]
    if len(set(plain)) == len(plain):
        return {(i, a): a for i, a in labels}
    logger.debug("Member universes overlap; prefixing element labels with their index")
    return {(i, a): f"{i}:{a}" for i, a in labels}


def plonka_sum_algebras(system: DirectedSystemOfAlgebras) -> FiniteAlgebra:
    """
    The Płonka sum of a valid directed system of algebras.

    Raises:
        DirectedSystemError: If the system violates any directed-system condition
    """
    violations = validate_directed_system(system)
    if violations:
        raise DirectedSystemError(
            "Invalid directed system: " + "; ".join(str(v) for v in violations)
        )
    index = system.index
    label_of = _global_labels(system)
    elements = list(label_of)  # (index, local label) in universe order
    universe = tuple(label_of[e] for e in elements)
    position = {e: n for n, e in enumerate(elements)}
    lang: Language = next(iter(system.algebras.values())).language

    tables: Dict[str, Tuple[int, ...]] = {}
    for op in lang.operators:
        if op.arity == 0:
            bottom = index.bottom()
            if bottom is None:
                raise DirectedSystemError(f"Nullary operator '{op.symbol}' needs a bottom index")
            local = system.algebras[bottom].operate(op.symbol)
            tables[op.symbol] = (position[(bottom, local)],)
            continue
        values = []
        for args in itertools.product(elements, repeat=op.arity):
            j = index.join_of([i for i, _ in args])
            target = system.algebras[j]
            pushed = []
            for i, a in args:
                f = system.hom(i, j)
                assert f is not None
                pushed.append(f[a])
            values.append(position[(j, target.operate(op.symbol, *pushed))])
        tables[op.symbol] = tuple(values)

    name = system.name or "+".join(str(system.algebras[i]) for i in index.elements)
    logger.debug(f"Płonka sum {name} has {len(universe)} elements")
    return FiniteAlgebra(lang, universe, tables, name)


def plonka_sum_matrices(system: DirectedSystemOfMatrices) -> Matrix:
    """The Płonka sum of the algebras with the union of the designated sets."""
    algebras = system.algebra_system()
    if not algebras.name:
        algebras = DirectedSystemOfAlgebras(
            algebras.index,
            algebras.algebras,
            algebras.homs,
            "+".join(system.matrices[i].name for i in system.index.elements),
        )
    algebra = plonka_sum_algebras(algebras)
    label_of = _global_labels(algebras)
    designated = frozenset(
        label_of[(i, a)] for i, m in system.matrices.items() for a in m.designated
    )
    return Matrix(algebra, designated, algebra.name)


def contamination_system(m: Matrix) -> DirectedSystemOfMatrices:
    """The two-index system {m ≤ trivial matrix} with the collapse map."""
    if OMEGA in m.algebra.universe:
        raise AlgebraError(f"{m} already uses the reserved label '{OMEGA}'")
    index = SemilatticeIndex.chain(("base", "omega"))
    collapse = {a: OMEGA for a in m.algebra.universe}
    return DirectedSystemOfMatrices(
        index,
        {"base": m, "omega": trivial_matrix(m.language)},
        {("base", "omega"): collapse},
        f"{m.name}+w",
    )


def adjoin_contaminating(m: Matrix) -> Matrix:
    """
    The matrix m ⊕ 1: m's algebra with a contaminating element ω adjoined.

    Every operation returns ω when any argument is ω and agrees with m otherwise;
    nullary operations are unchanged. The designated set gains ω.
    """
    algebra = m.algebra
    if OMEGA in algebra.universe:
        raise AlgebraError(f"{m} already uses the reserved label '{OMEGA}'")
    n = algebra.size
    omega = n
    tables: Dict[str, Tuple[int, ...]] = {}
    for op in algebra.language.operators:
        values = []
        for args in itertools.product(range(n + 1), repeat=op.arity):
            if omega in args:
                values.append(omega)
            else:
                values.append(algebra.apply(op.symbol, *args))
        tables[op.symbol] = tuple(values)
    extended = FiniteAlgebra(
        algebra.language, algebra.universe + (OMEGA,), tables, f"{algebra.name}+w"
    )
    return Matrix(extended, m.designated | {OMEGA}, f"{m.name}+w")
