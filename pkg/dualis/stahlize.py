"""
Stahlization: reverse the arrow of every sequent in every axiom and rule.

Sides are swapped wholesale and keep their internal order, so a binding for
a rule instance is also a binding for the mirrored instance of the dual rule.
"""
from .calculus import Calculus, RuleSchema, SchematicSequent, Sequent
from .engine import ProofTree

DUAL_MARK = "°"


def dual_name(name: str) -> str:
    return name[: -len(DUAL_MARK)] if name.endswith(DUAL_MARK) else name + DUAL_MARK


def mirror_sequent(s: Sequent) -> Sequent:
    return Sequent(s.succedent, s.antecedent)


def mirror_schematic(s: SchematicSequent) -> SchematicSequent:
    return SchematicSequent(s.succedent, s.antecedent)


def mirror_rule(rule: RuleSchema) -> RuleSchema:
    return RuleSchema(
        name=dual_name(rule.name),
        premises=tuple(mirror_schematic(p) for p in rule.premises),
        conclusion=mirror_schematic(rule.conclusion),
        side_conditions=rule.side_conditions,
        kind=rule.kind,
    )


def stahlize_calculus(c: Calculus) -> Calculus:
    return Calculus(
        name=dual_name(c.name),
        rules=tuple(mirror_rule(r) for r in c.rules),
        antecedent_bound=c.succedent_bound,
        succedent_bound=c.antecedent_bound,
    )


def mirror_proof(p: ProofTree) -> ProofTree:
    return ProofTree(
        sequent=mirror_sequent(p.sequent),
        rule=dual_name(p.rule),
        binding=p.binding,
        children=tuple(mirror_proof(child) for child in p.children),
    )
