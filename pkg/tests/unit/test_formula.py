"""Unit tests for languages, formulas, substitutions and schema matching."""

import random

import pytest

from src.syntax.formula import (
    HEYTING,
    MINIMAL,
    PRE_ROUGH,
    ArityMismatchError,
    Compound,
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
    variables_of,
)
from src.syntax.generate import random_formula
from src.syntax.parser import parse_formula


class TestLanguage:
    """Test cases for Language and Operator."""

    def test_declaration_order_does_not_matter(self):
        """Languages with the same operators compare equal."""
        a = Language((Operator("|", 2), Operator("&", 2)))
        b = Language.from_symbols("&", "|")
        assert a == b == MINIMAL
        assert a.symbols == ("&", "|")

    def test_duplicate_symbol_rejected(self):
        """Two operators may not share a symbol."""
        with pytest.raises(LanguageError):
            Language((Operator("&", 2), Operator("&", 1)))

    def test_negative_arity_rejected(self):
        with pytest.raises(LanguageError):
            Operator("f", -1)

    def test_non_grammar_symbol_needs_arity(self):
        with pytest.raises(LanguageError):
            Language.from_symbols("f")

    def test_arity_and_membership(self):
        assert HEYTING.arity("->") == 2
        assert HEYTING.arity("~") == 1
        assert "0" in HEYTING
        assert not HEYTING.has("I")
        with pytest.raises(UnknownOperatorError):
            HEYTING.arity("I")

    def test_nullary_in_lexicographic_order(self):
        assert HEYTING.nullary() == ("0", "1")
        assert MINIMAL.nullary() == ()

    def test_restrict_builds_reduct_language(self):
        reduct = PRE_ROUGH.restrict(["&", "|", "~"])
        assert reduct.symbols == ("&", "|", "~")
        with pytest.raises(UnknownOperatorError):
            MINIMAL.restrict(["->"])

    def test_union_checks_arities(self):
        assert MINIMAL.union(Language.from_symbols("~")).symbols == ("&", "|", "~")
        with pytest.raises(LanguageError):
            MINIMAL.union(Language((Operator("&", 3),)))


class TestFormula:
    """Test cases for formula construction and measures."""

    def test_size_depth_and_variables(self):
        f = parse_formula("p -> (q & ~p)")
        assert f.size == 6
        assert f.depth == 3
        assert f.variables == frozenset({"p", "q"})
        assert f.operator == "->"
        assert len(f.args) == 2

    def test_constants_are_variable_free(self):
        f = parse_formula("0 -> 1")
        assert f.variables == frozenset()
        assert f.depth == 1

    def test_equality_is_structural(self):
        assert app("&", var("p"), var("q")) == parse_formula("p & q")
        assert parse_formula("p & q") != parse_formula("q & p")
        assert len({parse_formula("p"), Variable("p")}) == 1

    @pytest.mark.parametrize("name", ["0", "1", "P", "p q", "~p", "2x"])
    def test_variable_names_must_be_identifiers(self, name):
        with pytest.raises(FormulaError, match="Invalid variable name"):
            Variable(name)

    def test_variable_names_follow_grammar(self):
        assert Variable("p0_b").text == "p0_b"
        assert parse_formula("p0_b") == Variable("p0_b")

    def test_formulas_are_immutable(self):
        f = var("p")
        with pytest.raises(AttributeError):
            f.text = "q"

    def test_order_is_by_size_then_text(self):
        formulas = sorted([parse_formula("p & q"), var("q"), var("p")])
        assert [f.text for f in formulas] == ["p", "q", "(p & q)"]

    def test_check_formula_reports_unknown_operator(self):
        with pytest.raises(UnknownOperatorError):
            check_formula(parse_formula("p -> q"), MINIMAL)

    def test_check_formula_reports_arity_mismatch(self):
        lang = Language((Operator("~", 2),))
        with pytest.raises(ArityMismatchError):
            check_formula(Compound("~", (var("p"),)), lang)

    def test_subformulas_root_first(self):
        f = parse_formula("p & ~q")
        assert [g.text for g in subformulas(f)] == ["(p & (~q))", "p", "(~q)", "q"]

    def test_variables_of_many(self):
        assert variables_of([var("p"), parse_formula("q | r")]) == frozenset({"p", "q", "r"})


class TestSubstitution:
    """Test cases for substitution application, composition and matching."""

    def test_apply_is_homomorphic(self):
        sigma = Substitution({"p": parse_formula("q -> r")})
        assert apply_substitution(sigma, parse_formula("p & p")) == parse_formula(
            "(q -> r) & (q -> r)"
        )

    def test_identity_outside_domain(self):
        sigma = Substitution({"p": var("q")})
        f = parse_formula("r | s")
        assert sigma.apply(f) is f
        assert sigma["r"] == var("r")

    def test_compose_applies_inner_first(self):
        inner = Substitution({"p": parse_formula("q & r")})
        outer = Substitution({"q": var("s"), "t": var("u")})
        composed = compose(outer, inner)
        f = parse_formula("p -> t")
        assert composed.apply(f) == outer.apply(inner.apply(f))

    def test_restrict_and_describe(self):
        sigma = Substitution({"beta": var("q"), "alpha": parse_formula("p & q")})
        assert sigma.describe() == "alpha=(p & q), beta=q"
        assert sigma.restrict(["alpha"]).domain == frozenset({"alpha"})
        assert len(Substitution.identity()) == 0

    def test_match_schema_binds_metavariables(self):
        schema = parse_formula("alpha -> (beta -> alpha)")
        sigma = match_schema(schema, parse_formula("p -> ((q & r) -> p)"))
        assert sigma is not None
        assert sigma.describe() == "alpha=p, beta=(q & r)"
        assert sigma.apply(schema) == parse_formula("p -> ((q & r) -> p)")

    def test_match_schema_rejects_inconsistent_binding(self):
        schema = parse_formula("alpha -> (beta -> alpha)")
        assert match_schema(schema, parse_formula("p -> (q -> q)")) is None

    def test_match_schema_extends_given_bindings(self):
        schema = parse_formula("alpha & beta")
        assert match_schema(schema, parse_formula("p & q"), {"alpha": var("q")}) is None
        sigma = match_schema(schema, parse_formula("p & q"), {"alpha": var("p")})
        assert sigma is not None and sigma["beta"] == var("q")

    def test_match_all_shares_one_substitution(self):
        premises = [parse_formula("alpha"), parse_formula("alpha -> beta")]
        good = [parse_formula("p"), parse_formula("p -> q")]
        bad = [parse_formula("r"), parse_formula("p -> q")]
        assert match_all(premises, good) == Substitution({"alpha": var("p"), "beta": var("q")})
        assert match_all(premises, bad) is None
        assert match_all(premises, good[:1]) is None


METAVARIABLES = ("alpha", "beta", "gamma")


class TestMatchSchemaSweep:
    """Seeded schema/target pairs up to depth 4."""

    def test_instances_of_random_schemas_are_matched(self):
        rng = random.Random(20210607)
        for _ in range(300):
            schema = random_formula(HEYTING, METAVARIABLES, 4, rng)
            sigma = Substitution(
                {m: random_formula(HEYTING, ("p", "q"), 2, rng) for m in schema.variables}
            )
            target = apply_substitution(sigma, schema)
            found = match_schema(schema, target)
            assert found is not None
            assert apply_substitution(found, schema) == target
            assert found.domain == schema.variables

    def test_returned_substitution_is_sound(self):
        rng = random.Random(7)
        matched = 0
        for _ in range(1000):
            schema = random_formula(PRE_ROUGH, METAVARIABLES, rng.randint(0, 2), rng)
            target = random_formula(PRE_ROUGH, ("p", "q"), 4, rng)
            sigma = match_schema(schema, target)
            if sigma is not None:
                matched += 1
                assert apply_substitution(sigma, schema) == target
        assert matched > 0
