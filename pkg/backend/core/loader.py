import logging

from dualis.errors import CalculusFormatError
from dualis.models import load_calculus

from . import config
from .config import calculus_registry

logger = logging.getLogger(__name__)


def load_initial_data():
    """Load stored user calculi on startup"""
    config.CALCULI_DIR.mkdir(parents=True, exist_ok=True)

    for path in sorted(config.CALCULI_DIR.glob("*.json")):
        try:
            calculus = load_calculus(path.read_text(encoding="utf-8"))
        except CalculusFormatError as e:
            logger.warning(f"Skipping {path.name}: {e}")
            continue
        calculus_registry[calculus.name] = calculus

    print(f"✅ Dualis service initialized ({len(calculus_registry)} user calculi)")
