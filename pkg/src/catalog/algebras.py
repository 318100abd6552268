"""
Built-in algebras and matrices.

Tables are written as nested label lists, rows indexed by the first argument in
universe order.
"""

import logging
from typing import Dict, FrozenSet, Tuple

from ..semantics.algebra import FiniteAlgebra, Matrix
from ..syntax.formula import HEYTING, LATTICE, PRE_ROUGH, RM3_LANGUAGE

logger = logging.getLogger(__name__)

CHAIN = ("0", "a", "1")
KLEENE = ("1", "1/2", "0")

# Three-element chain: meet is min, join is max.
_CHAIN_MEET = [["0", "0", "0"], ["0", "a", "a"], ["0", "a", "1"]]
_CHAIN_JOIN = [["0", "a", "1"], ["a", "a", "1"], ["1", "1", "1"]]

_KLEENE_MEET = [["1", "1/2", "0"], ["1/2", "1/2", "0"], ["0", "0", "0"]]
_KLEENE_JOIN = [["1", "1", "1"], ["1", "1/2", "1/2"], ["1", "1/2", "0"]]
_KLEENE_NEG = ["0", "1/2", "1"]


def boolean_two() -> Matrix:
    algebra = FiniteAlgebra.from_tables(
        HEYTING,
        ("0", "1"),
        {
            "&": [["0", "0"], ["0", "1"]],
            "|": [["0", "1"], ["1", "1"]],
            "->": [["1", "1"], ["0", "1"]],
            "~": ["1", "0"],
            "0": "0",
            "1": "1",
        },
        name="B2",
    )
    return Matrix(algebra, frozenset({"1"}), "B2")


def heyting_three() -> Matrix:
    """Three-element Heyting chain: a→b = 1 if a ≤ b else b, ¬a = a→0."""
    algebra = FiniteAlgebra.from_tables(
        HEYTING,
        CHAIN,
        {
            "&": _CHAIN_MEET,
            "|": _CHAIN_JOIN,
            "->": [["1", "1", "1"], ["0", "1", "1"], ["0", "a", "1"]],
            "~": ["1", "0", "0"],
            "0": "0",
            "1": "1",
        },
        name="H3",
    )
    return Matrix(algebra, frozenset({"1"}), "H3")


def rm3_matrix() -> Matrix:
    algebra = FiniteAlgebra.from_tables(
        RM3_LANGUAGE,
        KLEENE,
        {
            "&": _KLEENE_MEET,
            "|": _KLEENE_JOIN,
            "->": [["1", "0", "0"], ["1", "1/2", "0"], ["1", "1", "1"]],
            "~": _KLEENE_NEG,
        },
        name="M3",
    )
    return Matrix(algebra, frozenset({"1", "1/2"}), "M3")


def ps3_matrix() -> Matrix:
    """Same lattice and negation as M3; a→b is 0 exactly when a is designated and b = 0."""
    algebra = FiniteAlgebra.from_tables(
        RM3_LANGUAGE,
        KLEENE,
        {
            "&": _KLEENE_MEET,
            "|": _KLEENE_JOIN,
            "->": [["1", "1", "0"], ["1", "1", "0"], ["1", "1", "1"]],
            "~": _KLEENE_NEG,
        },
        name="PS3",
    )
    return Matrix(algebra, frozenset({"1", "1/2"}), "PS3")


def prerough_printed() -> Matrix:
    """
    The smallest pre-rough algebra as usually printed: ¬a = Ia = Ca = a, a→a = a.

    These tables fail the pre-rough conditions ¬Ix∨Ix = 1 and Ix→x = 1 at x = a;
    prerough_standard() is the member of the class.
    """
    algebra = FiniteAlgebra.from_tables(
        PRE_ROUGH,
        CHAIN,
        {
            "&": _CHAIN_MEET,
            "|": _CHAIN_JOIN,
            "->": [["1", "1", "1"], ["a", "a", "1"], ["0", "a", "1"]],
            "~": ["1", "a", "0"],
            "I": ["0", "a", "1"],
            "C": ["0", "a", "1"],
            "0": "0",
            "1": "1",
        },
        name="prerough3",
    )
    return Matrix(algebra, frozenset({"1"}), "prerough3")


def prerough_standard() -> Matrix:
    """Three-element pre-rough algebra: Ia = 0, Ca = 1, x→y = (¬Ix∨Iy)∧(¬Cx∨Cy)."""
    algebra = FiniteAlgebra.from_tables(
        PRE_ROUGH,
        CHAIN,
        {
            "&": _CHAIN_MEET,
            "|": _CHAIN_JOIN,
            "->": [["1", "1", "1"], ["0", "1", "1"], ["0", "0", "1"]],
            "~": ["1", "a", "0"],
            "I": ["0", "0", "1"],
            "C": ["0", "1", "1"],
            "0": "0",
            "1": "1",
        },
        name="prerough3-std",
    )
    return Matrix(algebra, frozenset({"1"}), "prerough3-std")


def chain_three() -> FiniteAlgebra:
    return FiniteAlgebra.from_tables(
        LATTICE, CHAIN, {"&": _CHAIN_MEET, "|": _CHAIN_JOIN, "0": "0", "1": "1"}, name="chain3"
    )


def diamond_four() -> FiniteAlgebra:
    """The four-element Boolean lattice 0 < a, b < 1."""
    return FiniteAlgebra.from_tables(
        LATTICE,
        ("0", "a", "b", "1"),
        {
            "&": [
                ["0", "0", "0", "0"],
                ["0", "a", "0", "a"],
                ["0", "0", "b", "b"],
                ["0", "a", "b", "1"],
            ],
            "|": [
                ["0", "a", "b", "1"],
                ["a", "a", "1", "1"],
                ["b", "1", "b", "1"],
                ["1", "1", "1", "1"],
            ],
            "0": "0",
            "1": "1",
        },
        name="diamond4",
    )


MATRIX_BUILDERS = {
    "B2": boolean_two,
    "H3": heyting_three,
    "M3": rm3_matrix,
    "PS3": ps3_matrix,
    "prerough3": prerough_printed,
    "prerough3-std": prerough_standard,
}

ALGEBRA_BUILDERS = {
    "chain3": chain_three,
    "diamond4": diamond_four,
}

# Class each catalog algebra is declared to belong to (checked on the named reduct).
DECLARED_CLASSES: Dict[str, Tuple[str, FrozenSet[str]]] = {
    "B2": ("boolean", frozenset(HEYTING.symbols)),
    "H3": ("heyting", frozenset(HEYTING.symbols)),
    "M3": ("quasi_boolean", frozenset({"&", "|", "~"})),
    "PS3": ("quasi_boolean", frozenset({"&", "|", "~"})),
    "prerough3": ("quasi_boolean", frozenset({"&", "|", "~", "0", "1"})),
    "prerough3-std": ("pre_rough", frozenset(PRE_ROUGH.symbols)),
    "chain3": ("bounded_distributive_lattice", frozenset(LATTICE.symbols)),
    "diamond4": ("bounded_distributive_lattice", frozenset(LATTICE.symbols)),
}
