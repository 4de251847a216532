from fastapi import APIRouter, HTTPException, UploadFile, File
from typing import List

from dualis.calculus import BUILTIN_IDS, Calculus, builtin_calculus, render_bounds, render_rule
from dualis.errors import DualisError
from dualis.models import CalculusDocument, load_calculus
from dualis.stahlize import stahlize_calculus

from ..models import CalculusSummary, RuleListing
from ..core.config import calculus_registry
from ..utils import http_error, is_builtin, remove_calculus_file, resolve_calculus, save_calculus

router = APIRouter(prefix="/api/calculi", tags=["calculi"])


def _summary(calculus: Calculus, builtin: bool) -> CalculusSummary:
    return CalculusSummary(
        name=calculus.name,
        rules=len(calculus.rules),
        antecedent_bound=calculus.antecedent_bound,
        succedent_bound=calculus.succedent_bound,
        builtin=builtin,
    )


def _lookup(ident: str) -> Calculus:
    try:
        return resolve_calculus(ident)
    except DualisError as e:
        raise http_error(e)


def _register(calculus: Calculus) -> Calculus:
    if is_builtin(calculus.name):
        raise HTTPException(status_code=400, detail=f"'{calculus.name}' is a built-in calculus")
    if calculus.name in calculus_registry:
        raise HTTPException(status_code=400, detail=f"calculus '{calculus.name}' already exists")
    calculus_registry[calculus.name] = calculus
    save_calculus(calculus)
    return calculus


@router.get("", response_model=List[CalculusSummary])
async def list_calculi():
    """Built-in calculi followed by the registered ones"""
    builtins = [_summary(builtin_calculus(i), True) for i in BUILTIN_IDS]
    users = [_summary(c, False) for _, c in sorted(calculus_registry.items())]
    return builtins + users


@router.get("/{ident}", response_model=CalculusDocument)
async def get_calculus(ident: str):
    return CalculusDocument.from_calculus(_lookup(ident))


@router.get("/{ident}/rules", response_model=RuleListing)
async def get_rules(ident: str):
    calculus = _lookup(ident)
    return RuleListing(
        name=calculus.name,
        bounds=render_bounds(calculus),
        rules=[render_rule(r) for r in calculus.rules],
    )


@router.get("/{ident}/dual", response_model=CalculusDocument)
async def get_dual(ident: str):
    """Stahlization of a calculus"""
    return CalculusDocument.from_calculus(stahlize_calculus(_lookup(ident)))


@router.post("", response_model=CalculusDocument)
async def add_calculus(document: CalculusDocument):
    """Register a user calculus"""
    try:
        calculus = document.to_calculus()
    except DualisError as e:
        raise http_error(e)
    return CalculusDocument.from_calculus(_register(calculus))


@router.post("/upload", response_model=CalculusDocument)
async def upload_calculus(file: UploadFile = File(...)):
    """Register a calculus from an uploaded JSON document"""
    if not (file.filename or "").endswith(".json"):
        raise HTTPException(status_code=400, detail="Unsupported file format")
    contents = await file.read()
    try:
        calculus = load_calculus(contents)
    except DualisError as e:
        raise http_error(e)
    return CalculusDocument.from_calculus(_register(calculus))


@router.delete("/{ident}")
async def delete_calculus(ident: str):
    if ident not in calculus_registry:
        if is_builtin(ident):
            raise HTTPException(status_code=400, detail="Built-in calculi cannot be deleted")
        raise HTTPException(status_code=404, detail="Calculus not found")
    calculus_registry.pop(ident)
    remove_calculus_file(ident)
    return {"message": f"Calculus '{ident}' deleted"}
