from fastapi import APIRouter

from dualis.calculus import parse_sequent, print_sequent
from dualis.engine import decide_classical
from dualis.errors import DualisError
from dualis.formula import atoms, formula_size, free_vars, is_propositional, parse_formula
from dualis.semantics import classify
from dualis.stahlize import mirror_sequent

from ..models import ClassifyResponse, FormulaRequest, MirrorResponse, ParseResponse, SequentRequest
from ..utils import http_error

router = APIRouter(prefix="/api", tags=["formulas"])


@router.post("/parse", response_model=ParseResponse)
async def parse(request: FormulaRequest):
    try:
        f = parse_formula(request.formula)
    except DualisError as e:
        raise http_error(e)
    return ParseResponse(
        formula=str(f),
        propositional=is_propositional(f),
        size=formula_size(f),
        atoms=sorted(atoms(f)),
        free_vars=sorted(free_vars(f)),
    )


@router.post("/classify", response_model=ClassifyResponse)
async def classify_formula(request: FormulaRequest):
    """Tautology, Contradiction or Contingent"""
    try:
        f = parse_formula(request.formula)
        label = classify(f)
    except DualisError as e:
        raise http_error(e)
    return ClassifyResponse(formula=str(f), classification=label.value)


@router.post("/mirror", response_model=MirrorResponse)
async def mirror(request: SequentRequest):
    try:
        s = parse_sequent(request.sequent)
    except DualisError as e:
        raise http_error(e)
    mirrored = mirror_sequent(s)
    response = MirrorResponse(sequent=print_sequent(s), mirror=print_sequent(mirrored))
    if s.is_propositional():
        response.valid = decide_classical(s)
        response.mirror_valid = decide_classical(mirrored)
    return response
