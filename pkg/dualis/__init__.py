"""Sequent calculi as data, their Stahlization, proof search and checking."""
from .calculus import (
    Binding,
    Calculus,
    MatchMode,
    RuleSchema,
    SchematicSequent,
    Sequent,
    Side,
    builtin_calculus,
    instantiate,
    match_conclusion,
    parse_sequent,
    print_sequent,
)
from .engine import (
    ProofTree,
    ProofVerdict,
    Proved,
    Refuted,
    SearchConfig,
    Unknown,
    check_proof,
    decide_classical,
    invert_negation,
    search,
)
from .formula import Formula, parse_formula, print_formula, substitute
from .semantics import Classification, classify, evaluate, sequent_valid
from .stahlize import mirror_proof, mirror_schematic, mirror_sequent, stahlize_calculus

__version__ = "1.0.0"
