from fastapi import APIRouter, HTTPException
from pydantic import ValidationError

from dualis.calculus import parse_sequent, print_sequent
from dualis.config import get_settings
from dualis.engine import Proved, SearchConfig, Unknown, check_proof, render_proof, search
from dualis.errors import DualisError
from dualis.models import ProofDocument

from ..models import CheckRequest, CheckResponse, ProveRequest, ProveResponse
from ..utils import http_error, resolve_calculus

router = APIRouter(prefix="/api", tags=["proofs"])


@router.post("/prove", response_model=ProveResponse)
def prove(request: ProveRequest):
    """Backward proof search for a propositional sequent"""
    settings = get_settings()
    try:
        cfg = SearchConfig(
            depth_bound=request.depth or settings.depth,
            contraction=request.contraction or settings.contraction,
        )
    except ValidationError as e:
        raise HTTPException(status_code=400, detail=str(e))

    try:
        calculus = resolve_calculus(request.calculus or "LK")
        goal = parse_sequent(request.sequent)
        result = search(calculus, goal, cfg)
    except DualisError as e:
        raise http_error(e)

    response = ProveResponse(verdict=result.verdict, calculus=calculus.name, sequent=print_sequent(goal))
    if isinstance(result, Proved):
        response.proof = ProofDocument.from_proof(calculus.name, result.tree)
        response.rendered = render_proof(result.tree)
    elif isinstance(result, Unknown):
        response.reason = result.reason
    return response


@router.post("/check", response_model=CheckResponse)
def check(request: CheckRequest):
    """Check a proof against the calculus it names, or the one given"""
    try:
        calculus = resolve_calculus(request.calculus or request.proof.calculus)
        proof = request.proof.to_proof()
    except DualisError as e:
        raise http_error(e)

    verdict = check_proof(calculus, proof)
    return CheckResponse(
        calculus=calculus.name,
        valid=verdict.valid,
        path=list(verdict.path),
        kind=verdict.kind,
        reason=verdict.reason,
    )
