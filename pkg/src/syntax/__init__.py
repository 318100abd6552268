"""
Syntax Package

Languages, formulas, substitutions, schema matching and the formula grammar.

Modules:
- formula: Language, Formula, Substitution and matching
- parser: Lark-based parser and canonical printer
- generate: Formula enumeration and random generation for property sweeps

Example Usage:
    from src.syntax import HEYTING, parse_formula, match_schema

    schema = parse_formula("alpha -> (beta -> alpha)")
    target = parse_formula("p -> (q & r -> p)", HEYTING)
    sigma = match_schema(schema, target)
    print(sigma.describe())   # alpha=p, beta=(q & r)
"""

from .formula import (
    GRAMMAR_ARITIES,
    HEYTING,
    LATTICE,
    MINIMAL,
    PRE_ROUGH,
    QUASI_BOOLEAN,
    RM3_LANGUAGE,
    ArityMismatchError,
    Compound,
    Formula,
    FormulaError,
    Language,
    LanguageError,
    Operator,
    Substitution,
    UnknownOperatorError,
    Variable,
    app,
    apply_substitution,
    check_formula,
    compose,
    match_all,
    match_schema,
    subformulas,
    var,
    formula_depth,
    formula_size,
    variables_of,
)
from .generate import enumerate_formulas, random_formula, random_instances
from .parser import FormulaParser, FormulaSyntaxError, parse_formula, print_formula

__all__ = [
    "GRAMMAR_ARITIES",
    "ArityMismatchError",
    "Compound",
    "Formula",
    "FormulaError",
    "FormulaParser",
    "FormulaSyntaxError",
    "Language",
    "LanguageError",
    "Operator",
    "Substitution",
    "UnknownOperatorError",
    "Variable",
    "app",
    "apply_substitution",
    "check_formula",
    "compose",
    "enumerate_formulas",
    "match_all",
    "match_schema",
    "parse_formula",
    "print_formula",
    "random_formula",
    "random_instances",
    "formula_depth",
    "formula_size",
    "subformulas",
    "var",
    "variables_of",
    "MINIMAL",
    "LATTICE",
    "QUASI_BOOLEAN",
    "HEYTING",
    "PRE_ROUGH",
    "RM3_LANGUAGE",
]
