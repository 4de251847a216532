import json

import pytest

from dualis.calculus import builtin_calculus, parse_sequent
from dualis.corpus import CorpusSpec, run_agreement
from dualis.engine import Proved, search
from dualis.errors import CalculusFormatError, ProofFormatError
from dualis.models import (
    ProofDocument,
    ReportDocument,
    dump_calculus,
    dump_json,
    dump_proof,
    load_calculus,
    load_proof,
    load_proof_document,
)


class TestCalculusDocuments:
    @pytest.mark.parametrize("ident", ["LK", "LJ", "SP", "ANTI_LJ"])
    def test_round_trip(self, ident):
        c = builtin_calculus(ident)
        text = dump_calculus(c)
        assert load_calculus(text) == c
        assert dump_calculus(load_calculus(text)) == text

    def test_document_shape(self, LK):
        data = json.loads(dump_calculus(LK))
        assert data["format"] == "dualis.calculus"
        assert data["version"] == 1
        assert data["antecedent_bound"] is None
        neg_left = next(r for r in data["rules"] if r["name"] == "¬L")
        assert neg_left["conclusion"]["ant"][0] == {
            "kind": "pattern",
            "connective": "not",
            "operands": ["A"],
            "binder": None,
            "term": None,
        }

    def test_accepts_parsed_json(self, LJ):
        assert load_calculus(json.loads(dump_calculus(LJ))) == LJ

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            '{"format": "dualis.proof", "version": 1, "name": "X", "rules": []}',
            '{"name": "X", "rules": [], "succedent_bound": -1}',
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(CalculusFormatError):
            load_calculus(text)

    def test_rejects_bad_pattern(self, LK):
        data = json.loads(dump_calculus(LK))
        data["rules"][8]["conclusion"]["ant"][0]["operands"] = ["A", "B"]
        with pytest.raises(CalculusFormatError):
            load_calculus(data)

    def test_rejects_repeated_rule_names(self, LK):
        data = json.loads(dump_calculus(LK))
        data["rules"].append(data["rules"][0])
        with pytest.raises(CalculusFormatError):
            load_calculus(data)


class TestProofDocuments:
    @pytest.mark.parametrize("text", ["p, p -> q |- q", "|- p | ~p", "~(p & q) |- ~p | ~q"])
    def test_round_trip_is_bit_exact(self, LK, text):
        result = search(LK, parse_sequent(text))
        assert isinstance(result, Proved)
        dumped = dump_proof("LK", result.tree)
        assert load_proof(dumped) == result.tree
        assert dump_proof("LK", load_proof(dumped)) == dumped

    def test_calculus_name_travels(self, LK):
        result = search(LK, parse_sequent("p |- p"))
        document = load_proof_document(dump_proof("LK", result.tree))
        assert document.calculus == "LK"
        assert document.root.rule == "axiom"
        assert document.root.binding.formulas == {"A": "p"}

    def test_rejects_bad_formula(self):
        data = {
            "format": "dualis.proof",
            "version": 1,
            "calculus": "LK",
            "root": {"sequent": {"ant": ["p &"], "suc": ["p"]}, "rule": "axiom"},
        }
        with pytest.raises(ProofFormatError):
            load_proof(data)

    def test_rejects_wrong_format(self):
        with pytest.raises(ProofFormatError):
            load_proof_document('{"format": "dualis.calculus", "calculus": "LK", "root": {}}')

    def test_first_order_terms(self):
        data = {
            "calculus": "LK",
            "root": {
                "sequent": {"ant": ["forall x. P(x)"], "suc": ["P(c)"]},
                "rule": "∀L",
                "binding": {
                    "contexts": {"Γ": [], "Θ": ["P(c)"]},
                    "formulas": {"A": "P(x)"},
                    "terms": {"x": "x", "t": "c"},
                },
                "children": [
                    {"sequent": {"ant": ["P(c)"], "suc": ["P(c)"]}, "rule": "axiom", "binding": {"formulas": {"A": "P(c)"}}}
                ],
            },
        }
        proof = load_proof(data)
        assert dump_proof("LK", proof) == dump_json(ProofDocument.model_validate(data))


def test_report_document_dump(tmp_path):
    report = run_agreement(CorpusSpec(atom_count=1), ["LK"])
    document = ReportDocument(**report.model_dump(), generated_at="2024-01-01T00:00:00+00:00")
    data = json.loads(dump_json(document))
    assert data["format"] == "dualis.report"
    assert data["summary"]["LK"]["proved"] + data["summary"]["LK"]["refuted"] == len(data["rows"])
    assert data["spec"]["templates"] == ["|-A", "A|-"]
