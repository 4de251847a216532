"""
Command-line surface.

Exit codes: 0 proved / valid / no disagreement, 1 refuted / invalid /
disagreement, 2 unknown, 64 usage, parse, IO or format errors.
"""
import argparse
import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from .calculus import Calculus, builtin_calculus, parse_sequent, print_sequent, render_calculus
from .config import get_settings
from .corpus import DEFAULT_CALCULI, CorpusSpec, run_agreement
from .engine import Proved, SearchConfig, Unknown, check_proof, render_proof, search
from .errors import DualisError
from .formula import parse_formula
from .models import ProofDocument, ReportDocument, dump_calculus, dump_json, load_calculus, load_proof_document
from .semantics import classify, counter_model
from .stahlize import mirror_sequent, stahlize_calculus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit_json(data: Any) -> None:
    print(json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2))


def _read(ref: str) -> str:
    if ref == "-":
        return sys.stdin.read()
    with open(ref, encoding="utf-8") as handle:
        return handle.read()


def _load_calculus(ref: str) -> Calculus:
    """A built-in id, a calculus JSON file, or '-' for standard input."""
    if ref == "-" or os.path.isfile(ref):
        return load_calculus(_read(ref))
    return builtin_calculus(ref)


def _search_config(args: argparse.Namespace) -> SearchConfig:
    settings = get_settings()
    return SearchConfig(
        depth_bound=args.depth if args.depth is not None else settings.depth,
        contraction=args.contraction or settings.contraction,
    )


def _format_valuation(v: Dict[str, bool]) -> str:
    return ", ".join(f"{atom}={'T' if value else 'F'}" for atom, value in v.items())


# ============================================================
# VERBS
# ============================================================

def cmd_prove(args: argparse.Namespace) -> int:
    calculus = _load_calculus(args.calculus)
    goal = parse_sequent(args.sequent)
    result = search(calculus, goal, _search_config(args))

    if args.emit == "json":
        if isinstance(result, Proved):
            print(dump_json(ProofDocument.from_proof(calculus.name, result.tree)), end="")
        else:
            payload = {"verdict": result.verdict, "calculus": calculus.name, "sequent": print_sequent(goal)}
            if isinstance(result, Unknown):
                payload["reason"] = result.reason
            _emit_json(payload)
    elif isinstance(result, Proved):
        print(f"proved in {calculus.name}:")
        print(render_proof(result.tree))
    elif isinstance(result, Unknown):
        print(f"unknown in {calculus.name}: {result.reason}")
    else:
        print(f"refuted in {calculus.name}: no proof of {print_sequent(goal)}")
        model = counter_model(goal)
        if model is not None:
            print(f"  classical countermodel: {_format_valuation(model) or '(no atoms)'}")

    if isinstance(result, Proved):
        return EXIT_OK
    return EXIT_UNKNOWN if isinstance(result, Unknown) else EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace) -> int:
    document = load_proof_document(_read(args.file))
    proof = document.to_proof()
    calculus = _load_calculus(args.calculus or document.calculus)
    verdict = check_proof(calculus, proof)

    if args.emit == "json":
        _emit_json(
            {
                "calculus": calculus.name,
                "valid": verdict.valid,
                "path": list(verdict.path),
                "kind": verdict.kind,
                "reason": verdict.reason,
            }
        )
    elif verdict.valid:
        print(f"valid in {calculus.name}")
    else:
        where = ".".join(str(i) for i in verdict.path) or "root"
        print(f"invalid in {calculus.name} at node {where} ({verdict.kind}): {verdict.reason}")
    return EXIT_OK if verdict.valid else EXIT_NEGATIVE


def _show_calculus(calculus: Calculus, emit: str) -> None:
    if emit == "json":
        print(dump_calculus(calculus), end="")
    else:
        print(render_calculus(calculus))


def cmd_dualize(args: argparse.Namespace) -> int:
    _show_calculus(stahlize_calculus(_load_calculus(args.calculus)), args.emit)
    return EXIT_OK


def cmd_rules(args: argparse.Namespace) -> int:
    _show_calculus(_load_calculus(args.calculus), args.emit)
    return EXIT_OK


def cmd_mirror(args: argparse.Namespace) -> int:
    s = parse_sequent(args.sequent)
    mirrored = mirror_sequent(s)
    if args.emit == "json":
        _emit_json({"sequent": print_sequent(s), "mirror": print_sequent(mirrored)})
    else:
        print(print_sequent(mirrored))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    f = parse_formula(args.formula)
    label = classify(f).value
    if args.emit == "json":
        _emit_json({"formula": str(f), "classification": label})
    else:
        print(label)
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    spec = CorpusSpec(
        atom_count=args.atoms,
        max_size=args.max_size,
        templates=args.template or ["|-A", "A|-"],
    )
    calculi = [c for c in args.calculi.split(",") if c.strip()]
    report = run_agreement(
        spec,
        calculi,
        _search_config(args),
        jobs=args.jobs,
        check_proofs=not args.no_check,
        budget=args.budget,
    )
    document = ReportDocument(
        **report.model_dump(),
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(dump_json(document))

    if args.emit == "json":
        print(dump_json(document), end="")
    else:
        oracle = report.summary["oracle"]
        print(f"{oracle['rows']} sequents, {oracle['valid']} valid, {oracle['mirror_valid']} mirror-valid")
        for ident in report.calculi:
            tally = report.summary[ident]
            print(f"  {ident:8} proved {tally['proved']:6}  refuted {tally['refuted']:6}  unknown {tally['unknown']:4}")
        for name, witness in report.witnesses.items():
            print(f"  {name}: {witness if witness is not None else '-'}")
        for d in report.disagreements[:20]:
            print(f"  ! {d.calculus} {d.verdict} on {d.sequent} (expected {d.expected})")
        if report.passed:
            print("✅ no disagreements")
        else:
            print(f"❌ {len(report.disagreements)} disagreement(s)")
    return EXIT_OK if report.passed else EXIT_NEGATIVE


# ============================================================
# PARSER
# ============================================================

def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")
    common.add_argument("--depth", type=_positive, default=None, help="Search depth bound (DUALIS_DEPTH)")
    common.add_argument(
        "--contraction", default=None, metavar="implicit-set|bounded:K", help="Contraction policy for search"
    )

    parser = _Parser(prog="dualis", description="Sequent calculi, their Stahlization, and proof search")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    prove = verbs.add_parser("prove", parents=[common], help="Search for a proof of a sequent")
    prove.add_argument("--calculus", default="LK", help="Built-in id or calculus JSON file")
    prove.add_argument("sequent", help="e.g. 'p, p -> q |- q'")
    prove.set_defaults(handler=cmd_prove)

    check = verbs.add_parser("check", parents=[common], help="Check a proof JSON file")
    check.add_argument("file", help="Proof JSON file, or - for standard input")
    check.add_argument("--calculus", default=None, help="Check against this calculus instead of the one named in the file")
    check.set_defaults(handler=cmd_check)

    dualize = verbs.add_parser("dualize", parents=[common], help="Stahlize a calculus")
    dualize.add_argument("calculus", help="Built-in id, calculus JSON file, or - for standard input")
    dualize.set_defaults(handler=cmd_dualize)

    mirror = verbs.add_parser("mirror", parents=[common], help="Swap the sides of a sequent")
    mirror.add_argument("sequent")
    mirror.set_defaults(handler=cmd_mirror)

    classify_ = verbs.add_parser("classify", parents=[common], help="Tautology, Contradiction or Contingent")
    classify_.add_argument("formula")
    classify_.set_defaults(handler=cmd_classify)

    rules = verbs.add_parser("rules", parents=[common], help="List the rules of a calculus")
    rules.add_argument("calculus", help="Built-in id, calculus JSON file, or - for standard input")
    rules.set_defaults(handler=cmd_rules)

    enum = verbs.add_parser("enumerate", parents=[common], help="Compare calculi with the oracle on a corpus")
    enum.add_argument("--atoms", type=_positive, default=2)
    enum.add_argument("--max-size", type=_positive, default=1, help="Largest connective count")
    enum.add_argument("--template", action="append", default=None, help="Sequent shape such as 'A,B|-C' (repeatable)")
    enum.add_argument("--calculi", default=",".join(DEFAULT_CALCULI))
    enum.add_argument("--jobs", type=_positive, default=1)
    enum.add_argument("--budget", type=_positive, default=None, help="Refuse corpora larger than this (default DUALIS_CORPUS_BUDGET or 1000000)")
    enum.add_argument("--report", default=None, help="Also write the JSON report to this path")
    enum.add_argument("--no-check", action="store_true", help="Skip re-checking found proofs")
    enum.set_defaults(handler=cmd_enumerate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        logging.basicConfig(
            level=get_settings().log_level,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
        return args.handler(args)
    except (DualisError, ValidationError, OSError, ValueError) as exc:
        print(f"dualis: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RecursionError:
        print("dualis: error: formula nested too deeply", file=sys.stderr)
        return EXIT_USAGE
