import pytest

from dualis.calculus import Binding, Sequent, builtin_calculus, parse_sequent, render_rule, render_schematic
from dualis.engine import ProofTree, Proved, check_proof, search
from dualis.formula import Atom
from dualis.stahlize import dual_name, mirror_proof, mirror_rule, mirror_schematic, mirror_sequent, stahlize_calculus


class TestMirrorSequent:
    @pytest.mark.parametrize(
        "text, expected",
        [("p |- q", "q |- p"), ("|- p & ~p", "p & ~p |-"), ("p |- p", "p |- p"), ("p, q |- r, s", "r, s |- p, q")],
    )
    def test_sides_swap(self, text, expected):
        assert mirror_sequent(parse_sequent(text)) == parse_sequent(expected)

    def test_involution(self):
        s = parse_sequent("p -> q, r |- ~p, q")
        assert mirror_sequent(mirror_sequent(s)) == s


class TestMirrorRules:
    def test_negation_left_reversed(self, SP):
        assert render_rule(SP.rule("¬L°")) == "¬L°: Θ,A ⊢ Γ / Θ ⊢ ¬A,Γ"

    def test_axiom_is_self_mirror(self, LK):
        axiom = LK.rule("axiom")
        assert mirror_schematic(axiom.conclusion) == axiom.conclusion

    def test_quantifier_rule(self, LK):
        assert render_schematic(mirror_rule(LK.rule("∀R")).conclusion) == "Θ,∀xA ⊢ Γ"

    def test_side_conditions_kept(self, LK):
        assert mirror_rule(LK.rule("∃L")).side_conditions == LK.rule("∃L").side_conditions

    def test_dual_name_toggles(self):
        assert dual_name("cut") == "cut°"
        assert dual_name("cut°") == "cut"


class TestStahlizeCalculus:
    @pytest.mark.parametrize("ident", ["LK", "LJ"])
    def test_involution(self, ident):
        c = builtin_calculus(ident)
        assert stahlize_calculus(stahlize_calculus(c)) == c

    def test_bounds_swap(self, LJ, ANTI_LJ):
        assert ANTI_LJ.antecedent_bound == 1
        assert ANTI_LJ.succedent_bound is None
        assert stahlize_calculus(LJ) == ANTI_LJ

    def test_rule_count_preserved(self, LK, SP):
        assert len(SP.rules) == len(LK.rules)
        assert [dual_name(r.name) for r in LK.rules] == [r.name for r in SP.rules]


class TestMirrorProof:
    def test_single_axiom(self, LK, SP):
        leaf = ProofTree(parse_sequent("p |- p"), "axiom", Binding.of(formulas={"A": Atom("p")}))
        mirrored = mirror_proof(leaf)
        assert mirrored.sequent == parse_sequent("p |- p")
        assert mirrored.rule == "axiom°"
        assert check_proof(SP, mirrored).valid

    def test_excluded_middle_becomes_contradiction(self, LK, SP):
        p = Atom("p")
        leaf = ProofTree(parse_sequent("p |- p"), "axiom", Binding.of(formulas={"A": p}))
        root = ProofTree(
            parse_sequent("|- p, ~p"),
            "¬R",
            Binding.of(contexts={"Γ": (), "Θ": (p,)}, formulas={"A": p}),
            (leaf,),
        )
        assert check_proof(LK, root).valid

        mirrored = mirror_proof(root)
        assert mirrored.sequent == parse_sequent("p, ~p |-")
        assert mirrored.rule == "¬R°"
        assert mirrored.children[0].rule == "axiom°"
        assert check_proof(SP, mirrored).valid

    @pytest.mark.parametrize(
        "text",
        ["p, p -> q |- q", "|- p | ~p", "p & q |- q & p", "~(p | q) |- ~p & ~q", "|- ((p -> q) -> p) -> p"],
    )
    def test_search_proofs_transport(self, LK, SP, text):
        result = search(LK, parse_sequent(text))
        assert isinstance(result, Proved)
        mirrored = mirror_proof(result.tree)
        assert mirrored.sequent == mirror_sequent(parse_sequent(text))
        assert check_proof(SP, mirrored).valid

    def test_mirror_is_involutive(self, LK):
        result = search(LK, parse_sequent("p -> q, ~q |- ~p"))
        assert mirror_proof(mirror_proof(result.tree)) == result.tree

    def test_empty_sequent_fixed(self):
        assert mirror_sequent(Sequent()) == Sequent()
