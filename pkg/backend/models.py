# ============================================================
# DATA MODELS (Pydantic)
# ============================================================
from pydantic import BaseModel, Field
from typing import List, Optional

from dualis.models import ProofDocument


class CalculusSummary(BaseModel):
    name: str
    rules: int
    antecedent_bound: Optional[int] = None
    succedent_bound: Optional[int] = None
    builtin: bool = False


class RuleListing(BaseModel):
    name: str
    bounds: str
    rules: List[str]


class ProveRequest(BaseModel):
    sequent: str
    calculus: Optional[str] = "LK"
    depth: Optional[int] = Field(None, ge=1)
    contraction: Optional[str] = None


class ProveResponse(BaseModel):
    verdict: str
    calculus: str
    sequent: str
    reason: Optional[str] = None
    proof: Optional[ProofDocument] = None
    rendered: Optional[str] = None


class CheckRequest(BaseModel):
    proof: ProofDocument
    calculus: Optional[str] = None


class CheckResponse(BaseModel):
    calculus: str
    valid: bool
    path: List[int] = []
    kind: Optional[str] = None
    reason: Optional[str] = ""


class FormulaRequest(BaseModel):
    formula: str


class ClassifyResponse(BaseModel):
    formula: str
    classification: str


class SequentRequest(BaseModel):
    sequent: str


class MirrorResponse(BaseModel):
    sequent: str
    mirror: str
    valid: Optional[bool] = None
    mirror_valid: Optional[bool] = None


class ParseResponse(BaseModel):
    formula: str
    propositional: bool
    size: int
    atoms: List[str]
    free_vars: List[str]
