"""
Formula parser and printer.

Grammar (precedence from tightest to loosest): unary `~`, `I`, `C`; then `&`; then
`|`; then `->`, which associates to the right. Variables match
`[a-z][a-zA-Z0-9_]*`; `0` and `1` are the nullary constants. Printing is fully
parenthesized (see `Compound` rendering) and reparses to an equal formula.
"""

import logging
from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .formula import (
    Compound,
    Formula,
    FormulaError,
    Language,
    Variable,
    check_formula,
)

logger = logging.getLogger(__name__)


class FormulaSyntaxError(FormulaError):
    """Raised when text does not conform to the formula grammar."""

    def __init__(self, message: str, text: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}: {text!r}")
        self.text = text
        self.line = line
        self.column = column


FORMULA_GRAMMAR = r"""
    ?start: implication

    ?implication: disjunction
                | disjunction "->" implication   -> implies

    ?disjunction: conjunction
                | disjunction "|" conjunction    -> disjoin

    ?conjunction: unary
                | conjunction "&" unary          -> conjoin

    ?unary: "~" unary                            -> negate
          | "I" unary                            -> interior
          | "C" unary                            -> closure
          | atom

    ?atom: VAR                                   -> variable
         | "0"                                   -> bottom
         | "1"                                   -> top
         | "(" implication ")"

    VAR: /[a-z][a-zA-Z0-9_]*/

    %import common.WS
    %ignore WS
"""


@v_args(inline=True)
class FormulaBuilder(Transformer):
    """Builds Formula objects directly from the parse tree."""

    def implies(self, left: Formula, right: Formula) -> Formula:
        return Compound("->", (left, right))

    def disjoin(self, left: Formula, right: Formula) -> Formula:
        return Compound("|", (left, right))

    def conjoin(self, left: Formula, right: Formula) -> Formula:
        return Compound("&", (left, right))

    def negate(self, arg: Formula) -> Formula:
        return Compound("~", (arg,))

    def interior(self, arg: Formula) -> Formula:
        return Compound("I", (arg,))

    def closure(self, arg: Formula) -> Formula:
        return Compound("C", (arg,))

    def variable(self, token: str) -> Formula:
        return Variable(str(token))

    def bottom(self) -> Formula:
        return Compound("0")

    def top(self) -> Formula:
        return Compound("1")


class FormulaParser:
    """
    LALR parser for the formula grammar.

    One instance is shared module-wide; Lark parsers are reusable across calls.
    """

    def __init__(self) -> None:
        self.parser = Lark(FORMULA_GRAMMAR, parser="lalr", transformer=FormulaBuilder())

    def parse(self, text: str, lang: Optional[Language] = None) -> Formula:
        """
        Parse text into a Formula.

        Args:
            text: Formula text
            lang: Language to validate operators against; skipped when None

        Returns:
            The formula denoted by text

        Raises:
            FormulaSyntaxError: If text does not conform to the grammar
            UnknownOperatorError: If an operator is not in lang
            ArityMismatchError: If lang declares a grammar connective with another arity
        """
        try:
            formula = self.parser.parse(text)
        except UnexpectedEOF as e:
            raise FormulaSyntaxError("Unexpected end of input", text, 1, len(text) + 1) from e
        except UnexpectedInput as e:
            line = getattr(e, "line", 1)
            column = getattr(e, "column", 1)
            raise FormulaSyntaxError("Syntax error", text, line, column) from e
        except VisitError as e:
            raise FormulaError(f"Could not build formula from {text!r}: {e.orig_exc}") from e
        if lang is not None:
            check_formula(formula, lang)
        return formula


_PARSER: Optional[FormulaParser] = None


def get_parser() -> FormulaParser:
    global _PARSER
    if _PARSER is None:
        _PARSER = FormulaParser()
        logger.debug("Formula parser initialized")
    return _PARSER


def parse_formula(text: str, lang: Optional[Language] = None) -> Formula:
    """Parse formula text, validating against lang when given."""
    return get_parser().parse(text, lang)


def print_formula(f: Formula) -> str:
    """Canonical fully parenthesized text of f."""
    return f.text
