from urllib.parse import quote

from fastapi import HTTPException

from dualis.calculus import Calculus, builtin_calculus
from dualis.errors import DualisError, UnknownCalculusError
from dualis.models import dump_calculus

from .core import config
from .core.config import calculus_registry


def _calculus_path(name: str):
    return config.CALCULI_DIR / f"{quote(name, safe='')}.json"


def save_calculus(calculus: Calculus) -> None:
    config.CALCULI_DIR.mkdir(parents=True, exist_ok=True)
    _calculus_path(calculus.name).write_text(dump_calculus(calculus), encoding="utf-8")


def remove_calculus_file(name: str) -> None:
    path = _calculus_path(name)
    if path.exists():
        path.unlink()


def is_builtin(name: str) -> bool:
    try:
        builtin_calculus(name)
    except UnknownCalculusError:
        return False
    return True


def resolve_calculus(ident: str) -> Calculus:
    """User calculi first, then the built-in ones."""
    if ident in calculus_registry:
        return calculus_registry[ident]
    return builtin_calculus(ident)


def http_error(exc: DualisError) -> HTTPException:
    status = 404 if isinstance(exc, UnknownCalculusError) else 400
    return HTTPException(status_code=status, detail=str(exc))
