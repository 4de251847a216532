import pytest
from hypothesis import given, settings

from dualis.errors import FormulaSyntaxError
from dualis.formula import (
    And,
    Atom,
    Const,
    Exists,
    Forall,
    Imp,
    Not,
    Or,
    Pred,
    Var,
    atoms,
    formula_size,
    free_vars,
    is_propositional,
    parse_formula,
    parse_sides,
    parse_term,
    print_formula,
    substitute,
)

from conftest import formulas, propositional_formulas

p, q, r = Atom("p"), Atom("q"), Atom("r")
x, y = Var("x"), Var("y")


def P(*args):
    return Pred("P", tuple(args))


def Q(*args):
    return Pred("Q", tuple(args))


class TestParse:
    def test_conjunction_with_negation(self):
        assert parse_formula("p & ~p") == And(p, Not(p))

    def test_implication_is_right_associative(self):
        assert parse_formula("p -> q -> r") == Imp(p, Imp(q, r))

    def test_quantifier_body_extends_right(self):
        assert parse_formula("forall x. P(x) -> Q(x)") == Forall("x", Imp(P(x), Q(x)))

    def test_precedence(self):
        assert parse_formula("~p & q | r -> p") == Imp(Or(And(Not(p), q), r), p)

    def test_conjunction_is_left_associative(self):
        assert parse_formula("p & q & r") == And(And(p, q), r)

    def test_whitespace_insensitive(self):
        assert parse_formula("  p->(q|r)  ") == parse_formula("p -> (q | r)")

    def test_terms_split_by_initial(self):
        assert parse_formula("P(x, a)") == P(x, Const("a"))
        assert parse_term("u1") == Var("u1")
        assert parse_term("b") == Const("b")

    def test_primed_names(self):
        assert parse_formula("exists y'. Q(y, y')") == Exists("y'", Q(Var("y"), Var("y'")))

    def test_quantifier_inside_conjunction(self):
        assert parse_formula("p & forall x. P(x) | q") == And(p, Forall("x", Or(P(x), q)))

    def test_sequent_sides(self):
        assert parse_sides("p, q |- r") == ((p, q), (r,))
        assert parse_sides("|-") == ((), ())
        assert parse_sides("p -> q |-") == ((Imp(p, q),), ())


class TestSyntaxErrors:
    def test_error_at_end_of_input(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("p &")
        assert info.value.offset == 3

    def test_error_offset_points_at_token(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("p & & q")
        assert info.value.offset == 4
        assert info.value.expected

    def test_unknown_character(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("p $ q")
        assert info.value.offset == 2

    def test_cannot_quantify_over_constant(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("forall a. P(a)")
        assert "variable" in info.value.expected

    def test_keywords_are_reserved(self):
        with pytest.raises(FormulaSyntaxError):
            parse_formula("forall & p")

    def test_deep_nesting(self):
        text = "~" * 100 + "p"
        assert print_formula(parse_formula(text)) == text
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula("~" * 5000 + "p")
        assert "nested" in info.value.expected


class TestPrint:
    @pytest.mark.parametrize(
        "text",
        ["p & ~p", "(p -> q) -> r", "forall x. P(x)", "p -> q -> r", "~(p & q)", "(forall x. P(x)) -> p", "p | q & r"],
    )
    def test_canonical_form_is_stable(self, text):
        assert print_formula(parse_formula(text)) == text

    def test_minimal_parentheses(self):
        assert print_formula(And(Or(p, q), r)) == "(p | q) & r"
        assert print_formula(Not(Forall("x", P(x)))) == "~forall x. P(x)"
        assert print_formula(And(Not(Forall("x", P(x))), q)) == "~(forall x. P(x)) & q"

    @given(formulas)
    @settings(max_examples=500)
    def test_round_trip(self, f):
        assert parse_formula(print_formula(f)) == f

    @pytest.mark.slow
    @given(formulas)
    @settings(max_examples=10_000)
    def test_round_trip_ten_thousand(self, f):
        assert parse_formula(print_formula(f)) == f


class TestVariables:
    def test_substitute_free_occurrence(self):
        assert substitute(P(x), "x", Const("c")) == P(Const("c"))

    def test_bound_occurrence_untouched(self):
        f = Forall("x", P(x))
        assert substitute(f, "x", Const("c")) == f

    def test_capture_is_avoided(self):
        f = Exists("y", Q(x, y))
        assert substitute(f, "x", y) == Exists("y'", Q(y, Var("y'")))

    def test_free_vars(self):
        assert free_vars(Forall("x", P(x, y))) == {"y"}
        assert free_vars(p) == frozenset()
        assert free_vars(Imp(P(x), Exists("x", Q(x)))) == {"x"}

    @given(formulas)
    def test_identity_substitution(self, f):
        for v in ("x", "y", "z"):
            assert substitute(f, v, Var(v)) == f

    @given(propositional_formulas)
    def test_propositional_formulas_are_closed(self, f):
        assert is_propositional(f)
        assert free_vars(f) == frozenset()

    def test_size_and_atoms(self):
        f = parse_formula("~(p & q) -> r")
        assert formula_size(f) == 3
        assert atoms(f) == {"p", "q", "r"}

    def test_constructors_enforce_lexical_split(self):
        with pytest.raises(ValueError):
            Var("a")
        with pytest.raises(ValueError):
            Const("x")
        with pytest.raises(ValueError):
            Forall("c", p)
