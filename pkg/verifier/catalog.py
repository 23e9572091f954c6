"""
Theorem Catalog Loader
Joins the statements in config/theorems.yaml with the check functions registered in verifier.checks
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import yaml

from tools.errors import GammaAlgebraError

logger = logging.getLogger(__name__)

# Path to theorem statements
THEOREMS_PATH = Path(__file__).parent.parent / "config" / "theorems.yaml"

CATALOG_ORDER = (
    "T3.4", "T3.5", "T3.6", "T3.7", "P3.8", "P3.9", "P3.10", "P3.11", "T3.12", "T3.13",
    "T4.7", "T4.8", "T4.9", "T4.10", "P4.13", "T4.14", "C4.15", "T4.17", "T4.18", "P4.19",
    "T4.24", "T4.25",
    "P5.2", "P5.3", "C5.4", "P5.5", "T5.6", "T5.7", "P5.8", "P5.9", "P5.10", "P5.11",
    "L5.12", "T5.13", "T5.14", "T5.15", "T5.16", "T5.17", "T5.18",
)

CheckFunction = Callable[[Any], Any]

_CHECKS: Dict[str, CheckFunction] = {}


def register(theorem_id: str) -> Callable[[CheckFunction], CheckFunction]:
    """Decorator binding a check function to a catalog id."""
    if theorem_id not in CATALOG_ORDER:
        raise ValueError(f"Unknown theorem id '{theorem_id}'")

    def decorator(function: CheckFunction) -> CheckFunction:
        if theorem_id in _CHECKS:
            raise ValueError(f"Theorem '{theorem_id}' already has a check ({_CHECKS[theorem_id].__name__})")
        _CHECKS[theorem_id] = function
        return function

    return decorator


@dataclass(frozen=True)
class TheoremEntry:
    id: str
    title: str
    form: str
    hypothesis: str
    conclusion: str
    check: CheckFunction

    def statement(self) -> str:
        return f"{self.id} {self.title}\n  if:   {self.hypothesis}\n  then: {self.conclusion}"


def load_theorem_statements(path: Optional[Path] = None) -> Dict[str, Dict[str, str]]:
    """
    Load all theorem statements from YAML.

    Returns:
        Dictionary of theorem id -> {title, form, hypothesis, conclusion}
    """
    path = Path(path) if path is not None else THEOREMS_PATH
    try:
        with open(path, "r") as f:
            statements = yaml.safe_load(f)
    except FileNotFoundError:
        raise FileNotFoundError(
            f"Theorem statements file not found at {path}. "
            "Please ensure config/theorems.yaml exists."
        )
    except yaml.YAMLError as e:
        raise ValueError(f"Error parsing theorem statements YAML: {e}")
    return {str(key): value for key, value in (statements or {}).items()}


_catalog: Optional[List[TheoremEntry]] = None


def get_catalog() -> List[TheoremEntry]:
    """All theorems in catalog order; fails if any id lacks a statement or a check."""
    global _catalog
    if _catalog is not None:
        return _catalog

    import verifier.checks  # noqa: F401  (registers the check functions)

    statements = load_theorem_statements()
    missing_statements = [tid for tid in CATALOG_ORDER if tid not in statements]
    missing_checks = [tid for tid in CATALOG_ORDER if tid not in _CHECKS]
    if missing_statements or missing_checks:
        raise ValueError(
            f"Incomplete theorem catalog. Missing statements: {missing_statements or 'none'}; "
            f"missing checks: {missing_checks or 'none'}"
        )

    _catalog = [
        TheoremEntry(
            id=tid,
            title=statements[tid]["title"],
            form=statements[tid]["form"],
            hypothesis=statements[tid]["hypothesis"],
            conclusion=statements[tid]["conclusion"],
            check=_CHECKS[tid],
        )
        for tid in CATALOG_ORDER
    ]
    logger.debug(f"[catalog] ✅ {len(_catalog)} theorems loaded")
    return _catalog


def get_theorem(theorem_id: str) -> TheoremEntry:
    key = theorem_id.strip().upper()
    for entry in get_catalog():
        if entry.id == key:
            return entry
    raise GammaAlgebraError(f"Unknown theorem id '{theorem_id}'. Available: {', '.join(CATALOG_ORDER)}")


def parse_theorem_ids(text: Optional[str]) -> List[str]:
    """Comma-separated ids (case-insensitive) in catalog order; None or empty means all."""
    if not text:
        return list(CATALOG_ORDER)
    wanted = {get_theorem(part).id for part in text.split(",") if part.strip()}
    return [tid for tid in CATALOG_ORDER if tid in wanted]
