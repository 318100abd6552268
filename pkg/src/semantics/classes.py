"""
Algebra Classes

Membership tests for bounded distributive lattices, quasi-Boolean, Heyting,
Boolean and pre-rough algebras by table exhaustion, plus brute-force enumeration
of small members up to isomorphism.

Each class has a `*_violations` function returning one human-readable witness per
failed condition; the `is_*` predicates are true exactly when that list is empty.
When the constants 0 and 1 are not in an algebra's language, the bounds are taken
from the lattice order and must exist.
"""

import itertools
import logging
import string
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..syntax.formula import HEYTING, LATTICE, PRE_ROUGH, QUASI_BOOLEAN, Language
from .algebra import FiniteAlgebra, trivial_algebra

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 4


class MissingOperatorError(ValueError):
    """Raised when an algebra or matrix lacks an operator a check needs."""

    pass


class EnumerationError(ValueError):
    """Raised for unsupported classes or sizes beyond the enumeration guardrail."""

    pass


def _require(algebra: FiniteAlgebra, *symbols: str) -> None:
    missing = [s for s in symbols if not algebra.language.has(s)]
    if missing:
        raise MissingOperatorError(
            f"{algebra} lacks operator(s) {missing} needed for this check"
        )


def _witness(algebra: FiniteAlgebra, ok: np.ndarray, names: Sequence[str]) -> Optional[str]:
    bad = np.argwhere(~ok)
    if bad.size == 0:
        return None
    first = bad[0]
    return ", ".join(f"{n}={algebra.universe[int(i)]}" for n, i in zip(names, first))


def _collect(
    violations: List[str], algebra: FiniteAlgebra, condition: str, ok: np.ndarray, names: Sequence[str]
) -> None:
    witness = _witness(algebra, np.asarray(ok), names)
    if witness is not None:
        violations.append(f"{condition} fails at {witness}")


def bounds(algebra: FiniteAlgebra) -> Tuple[Optional[int], Optional[int]]:
    """Indices of bottom and top: the constants when present, else from the meet order."""
    meet = algebra.array("&")
    if algebra.language.has("0"):
        bottom: Optional[int] = algebra.apply("0")
    else:
        lows = [b for b in range(algebra.size) if np.all(meet[b, :] == b)]
        bottom = lows[0] if lows else None
    if algebra.language.has("1"):
        top: Optional[int] = algebra.apply("1")
    else:
        highs = [t for t in range(algebra.size) if np.all(meet[t, :] == np.arange(algebra.size))]
        top = highs[0] if highs else None
    return bottom, top


def leq(algebra: FiniteAlgebra, a: int, b: int) -> bool:
    """Lattice order a ≤ b, read off the meet table."""
    return algebra.apply("&", a, b) == a


def lattice_violations(algebra: FiniteAlgebra) -> List[str]:
    """Bounded distributive lattice conditions on the ∧, ∨ reduct."""
    _require(algebra, "&", "|")
    meet, join = algebra.array("&"), algebra.array("|")
    n = algebra.size
    x2, y2 = np.indices((n, n))
    x3, y3, z3 = np.indices((n, n, n))
    xy, xyz = ("x", "y"), ("x", "y", "z")
    v: List[str] = []

    _collect(v, algebra, "∧ commutativity", meet[x2, y2] == meet[y2, x2], xy)
    _collect(v, algebra, "∨ commutativity", join[x2, y2] == join[y2, x2], xy)
    _collect(v, algebra, "∧ associativity", meet[meet[x3, y3], z3] == meet[x3, meet[y3, z3]], xyz)
    _collect(v, algebra, "∨ associativity", join[join[x3, y3], z3] == join[x3, join[y3, z3]], xyz)
    idx = np.arange(n)
    _collect(v, algebra, "∧ idempotence", meet[idx, idx] == idx, ("x",))
    _collect(v, algebra, "∨ idempotence", join[idx, idx] == idx, ("x",))
    _collect(v, algebra, "absorption x∧(x∨y)=x", meet[x2, join[x2, y2]] == x2, xy)
    _collect(v, algebra, "absorption x∨(x∧y)=x", join[x2, meet[x2, y2]] == x2, xy)
    _collect(
        v,
        algebra,
        "distributivity",
        meet[x3, join[y3, z3]] == join[meet[x3, y3], meet[x3, z3]],
        xyz,
    )

    if algebra.language.has("0"):
        zero = algebra.apply("0")
        _collect(v, algebra, "0 is bottom (0∨x=x)", join[zero, idx] == idx, ("x",))
    if algebra.language.has("1"):
        one = algebra.apply("1")
        _collect(v, algebra, "1 is top (1∧x=x)", meet[one, idx] == idx, ("x",))
    if not v:
        bottom, top = bounds(algebra)
        if bottom is None:
            v.append("no bottom element")
        if top is None:
            v.append("no top element")
    return v


def quasi_boolean_violations(algebra: FiniteAlgebra) -> List[str]:
    """Conditions (i)-(iii): bounded distributive lattice, involution, De Morgan."""
    _require(algebra, "&", "|", "~")
    v = lattice_violations(algebra)
    meet, join, neg = algebra.array("&"), algebra.array("|"), algebra.array("~")
    n = algebra.size
    idx = np.arange(n)
    x2, y2 = np.indices((n, n))
    _collect(v, algebra, "involution ¬¬x=x", neg[neg[idx]] == idx, ("x",))
    _collect(
        v, algebra, "De Morgan ¬(x∨y)=¬x∧¬y", neg[join[x2, y2]] == meet[neg[x2], neg[y2]], ("x", "y")
    )
    return v


def _relative_pseudocomplement(algebra: FiniteAlgebra, a: int, b: int) -> Optional[int]:
    candidates = [x for x in range(algebra.size) if leq(algebra, algebra.apply("&", a, x), b)]
    for c in candidates:
        if all(leq(algebra, x, c) for x in candidates):
            return c
    return None


def heyting_violations(algebra: FiniteAlgebra) -> List[str]:
    """Bounded distributive lattice with → as relative pseudo-complement and ¬a = a→0."""
    _require(algebra, "&", "|", "->", "~")
    v = lattice_violations(algebra)
    if v:
        return v
    bottom, _ = bounds(algebra)
    assert bottom is not None
    u = algebra.universe
    for a, b in itertools.product(range(algebra.size), repeat=2):
        expected = _relative_pseudocomplement(algebra, a, b)
        actual = algebra.apply("->", a, b)
        if expected is None:
            v.append(f"no largest x with {u[a]}∧x ≤ {u[b]}")
        elif actual != expected:
            v.append(
                f"residuation fails at x={u[a]}, y={u[b]}: "
                f"x→y = {u[actual]} but the largest z with x∧z ≤ y is {u[expected]}"
            )
    for a in range(algebra.size):
        if algebra.apply("~", a) != algebra.apply("->", a, bottom):
            v.append(f"¬x = x→0 fails at x={u[a]}")
    return v


def boolean_violations(algebra: FiniteAlgebra) -> List[str]:
    v = heyting_violations(algebra)
    if v:
        return v
    _, top = bounds(algebra)
    join, neg = algebra.array("|"), algebra.array("~")
    idx = np.arange(algebra.size)
    _collect(v, algebra, "excluded middle x∨¬x=1", join[idx, neg[idx]] == top, ("x",))
    return v


def pre_rough_violations(algebra: FiniteAlgebra) -> List[str]:
    """Conditions (i)-(viii) of the pre-rough algebra definition."""
    _require(algebra, "&", "|", "->", "~", "I", "C", "0", "1")
    v = quasi_boolean_violations(algebra)
    meet, join, neg = algebra.array("&"), algebra.array("|"), algebra.array("~")
    imp, interior, closure = algebra.array("->"), algebra.array("I"), algebra.array("C")
    one = algebra.apply("1")
    n = algebra.size
    idx = np.arange(n)
    x2, y2 = np.indices((n, n))

    if interior[one] != one:
        v.append("(ii) I1=1 fails")
    _collect(
        v,
        algebra,
        "(iii) I(x∧y)=Ix∧Iy",
        interior[meet[x2, y2]] == meet[interior[x2], interior[y2]],
        ("x", "y"),
    )
    _collect(v, algebra, "(iv) ¬Ix∨Ix=1", join[neg[interior[idx]], interior[idx]] == one, ("x",))
    _collect(v, algebra, "(v) Ix→x=1", imp[interior[idx], idx] == one, ("x",))
    _collect(v, algebra, "(vi) Cx=¬I¬x", closure[idx] == neg[interior[neg[idx]]], ("x",))
    defined = meet[
        join[neg[interior[x2]], interior[y2]], join[neg[closure[x2]], closure[y2]]
    ]
    _collect(v, algebra, "(vii) x→y=(¬Ix∨Iy)∧(¬Cx∨Cy)", imp[x2, y2] == defined, ("x", "y"))
    premise = (imp[closure[x2], closure[y2]] == one) & (imp[interior[x2], interior[y2]] == one)
    holds = ~premise | (imp[x2, y2] == one)
    _collect(v, algebra, "(viii) Cx→Cy=1 and Ix→Iy=1 imply x→y=1", holds, ("x", "y"))
    return v


def is_bounded_distributive_lattice(algebra: FiniteAlgebra) -> bool:
    return not lattice_violations(algebra)


def is_quasi_boolean(algebra: FiniteAlgebra) -> bool:
    return not quasi_boolean_violations(algebra)


def is_heyting(algebra: FiniteAlgebra) -> bool:
    return not heyting_violations(algebra)


def is_boolean(algebra: FiniteAlgebra) -> bool:
    return not boolean_violations(algebra)


def is_pre_rough(algebra: FiniteAlgebra) -> bool:
    return not pre_rough_violations(algebra)


CLASS_LANGUAGES: Dict[str, Language] = {
    "bounded_distributive_lattice": LATTICE,
    "quasi_boolean": QUASI_BOOLEAN,
    "heyting": HEYTING,
    "boolean": HEYTING,
    "pre_rough": PRE_ROUGH,
}

CLASS_PREDICATES: Dict[str, Callable[[FiniteAlgebra], bool]] = {
    "bounded_distributive_lattice": is_bounded_distributive_lattice,
    "quasi_boolean": is_quasi_boolean,
    "heyting": is_heyting,
    "boolean": is_boolean,
    "pre_rough": is_pre_rough,
}


def normalize_class_name(name: str) -> str:
    key = name.strip().lower().replace("-", "_").replace(" ", "_")
    if key == "lattice":
        key = "bounded_distributive_lattice"
    if key not in CLASS_PREDICATES:
        raise EnumerationError(
            f"Unsupported algebra class '{name}'. Known: {sorted(CLASS_PREDICATES)}"
        )
    return key


def canonical_form(algebra: FiniteAlgebra) -> Tuple[Tuple[str, Tuple[int, ...]], ...]:
    """Lexicographically least table encoding over all relabelings of the universe."""
    n = algebra.size
    best: Optional[Tuple[Tuple[str, Tuple[int, ...]], ...]] = None
    for perm in itertools.permutations(range(n)):
        inverse = [0] * n
        for old, new in enumerate(perm):
            inverse[new] = old
        key = []
        for op in algebra.language.operators:
            table = tuple(
                perm[algebra.apply(op.symbol, *(inverse[a] for a in args))]
                for args in itertools.product(range(n), repeat=op.arity)
            )
            key.append((op.symbol, table))
        candidate = tuple(key)
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return best


def are_isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    if a.language != b.language or a.size != b.size:
        return False
    return canonical_form(a) == canonical_form(b)


def _labels(n: int) -> Tuple[str, ...]:
    return ("0",) + tuple(string.ascii_lowercase[: n - 2]) + ("1",)


def _lattice_orders(n: int) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """Meet and join tables of every bounded lattice order on n ≥ 2 labeled elements.

    Element 0 is the bottom and n-1 the top; the middle elements are ordered by
    every antisymmetric transitive relation.
    """
    middle = list(range(1, n - 1))
    pairs = [(i, j) for i in middle for j in middle if i != j]
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        le = np.eye(n, dtype=bool)
        le[0, :] = True
        le[:, n - 1] = True
        for (i, j), on in zip(pairs, chosen):
            if on:
                le[i, j] = True
        if np.any(le & le.T & ~np.eye(n, dtype=bool)):
            continue
        closed = le.copy()
        for k in range(n):
            closed |= closed[:, [k]] & closed[[k], :]
        if not np.array_equal(closed, le):
            continue
        meet = np.zeros((n, n), dtype=np.intp)
        join = np.zeros((n, n), dtype=np.intp)
        ok = True
        for a, b in itertools.product(range(n), repeat=2):
            lower = [c for c in range(n) if le[c, a] and le[c, b]]
            upper = [c for c in range(n) if le[a, c] and le[b, c]]
            glb = [c for c in lower if all(le[d, c] for d in lower)]
            lub = [c for c in upper if all(le[c, d] for d in upper)]
            if not glb or not lub:
                ok = False
                break
            meet[a, b], join[a, b] = glb[0], lub[0]
        if ok:
            yield meet, join


def _build(
    lang: Language, labels: Tuple[str, ...], tables: Dict[str, np.ndarray]
) -> FiniteAlgebra:
    flat = {symbol: tuple(int(x) for x in np.asarray(t).reshape(-1)) for symbol, t in tables.items()}
    return FiniteAlgebra(lang, labels, {s: flat[s] for s in lang.symbols})


def _candidates(class_name: str, n: int) -> Iterator[FiniteAlgebra]:
    lang = CLASS_LANGUAGES[class_name]
    labels = _labels(n)
    bottom, top = np.array(0), np.array(n - 1)
    for meet, join in _lattice_orders(n):
        base = {"&": meet, "|": join, "0": bottom, "1": top}
        if class_name == "bounded_distributive_lattice":
            yield _build(lang, labels, base)
            continue
        if class_name in ("heyting", "boolean"):
            lattice = _build(LATTICE, labels, base)
            imp = np.zeros((n, n), dtype=np.intp)
            for a, b in itertools.product(range(n), repeat=2):
                rpc = _relative_pseudocomplement(lattice, a, b)
                if rpc is None:
                    break
                imp[a, b] = rpc
            else:
                neg = imp[:, 0].copy()
                yield _build(lang, labels, {**base, "->": imp, "~": neg})
            continue
        for neg_values in itertools.product(range(n), repeat=n):
            neg = np.array(neg_values, dtype=np.intp)
            if np.any(neg[neg] != np.arange(n)) or neg[0] != n - 1:
                continue
            if class_name == "quasi_boolean":
                yield _build(lang, labels, {**base, "~": neg})
                continue
            yield from _pre_rough_candidates(lang, labels, base, neg, meet, join)


def _pre_rough_candidates(
    lang: Language,
    labels: Tuple[str, ...],
    base: Dict[str, np.ndarray],
    neg: np.ndarray,
    meet: np.ndarray,
    join: np.ndarray,
) -> Iterator[FiniteAlgebra]:
    n = len(labels)
    top = n - 1
    x2, y2 = np.indices((n, n))
    for interior_values in itertools.product(range(n), repeat=n):
        interior = np.array(interior_values, dtype=np.intp)
        if interior[top] != top:
            continue
        if np.any(join[neg[interior], interior] != top):
            continue
        if np.any(interior[meet[x2, y2]] != meet[interior[x2], interior[y2]]):
            continue
        closure = neg[interior[neg]]
        imp = meet[join[neg[interior[x2]], interior[y2]], join[neg[closure[x2]], closure[y2]]]
        yield _build(lang, labels, {**base, "~": neg, "I": interior, "C": closure, "->": imp})


def enumerate_algebras(
    class_name: str, lang: Optional[Language] = None, max_size: int = 3
) -> Iterator[FiniteAlgebra]:
    """
    Yield every member of an algebra class with at most max_size elements.

    Algebras are yielded by increasing size, one representative per isomorphism
    class. Universes of size n ≥ 2 are labeled 0, a, b, ..., 1 with 0 the bottom and
    1 the top; size 1 yields the trivial algebra.

    Args:
        class_name: One of bounded_distributive_lattice, quasi_boolean, heyting,
            boolean, pre_rough (hyphens and spaces accepted)
        lang: The class language; defaults to it and must equal it when given
        max_size: Largest universe size, at most 4

    Raises:
        EnumerationError: Unsupported class or language, or max_size beyond 4
    """
    key = normalize_class_name(class_name)
    expected = CLASS_LANGUAGES[key]
    if lang is not None and lang != expected:
        raise EnumerationError(f"Class {key} is enumerated over {expected}, not {lang}")
    if max_size > MAX_ENUMERATION_SIZE:
        raise EnumerationError(
            f"max_size {max_size} exceeds the enumeration limit of {MAX_ENUMERATION_SIZE}"
        )
    predicate = CLASS_PREDICATES[key]
    if max_size >= 1:
        trivial = trivial_algebra(expected)
        if predicate(trivial):
            yield trivial
    for n in range(2, max_size + 1):
        seen: Set[Tuple[Tuple[str, Tuple[int, ...]], ...]] = set()
        for candidate in _candidates(key, n):
            if not predicate(candidate):
                continue
            form = canonical_form(candidate)
            if form in seen:
                continue
            seen.add(form)
            yield candidate
        logger.debug(f"Enumerated {len(seen)} {key} algebra(s) of size {n}")
