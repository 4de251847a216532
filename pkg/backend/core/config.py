from pathlib import Path
from typing import Dict

from dualis.calculus import Calculus
from dualis.config import get_settings

CALCULI_DIR = Path(get_settings().calculi_dir)

# In-memory store of user calculi, keyed by calculus name
calculus_registry: Dict[str, Calculus] = {}
