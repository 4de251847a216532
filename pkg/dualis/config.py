import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

_settings_instance: Optional["Settings"] = None


class Settings(BaseModel):
    depth: int = Field(64, ge=1)
    contraction: str = "implicit-set"
    log_level: str = "WARNING"
    corpus_budget: int = Field(1_000_000, ge=1)
    calculi_dir: str = "data/calculi"


def get_settings() -> Settings:
    global _settings_instance

    if _settings_instance is None:
        _settings_instance = Settings(
            depth=int(os.getenv("DUALIS_DEPTH", "64")),
            contraction=os.getenv("DUALIS_CONTRACTION", "implicit-set"),
            log_level=os.getenv("DUALIS_LOG_LEVEL", "WARNING").upper(),
            corpus_budget=int(os.getenv("DUALIS_CORPUS_BUDGET", "1000000")),
            calculi_dir=os.getenv("DUALIS_CALCULI_DIR", "data/calculi"),
        )

    return _settings_instance


def reset_settings() -> None:
    global _settings_instance
    _settings_instance = None
