"""
Verifier settings.

Defaults come from config/verifier.yaml; environment variables (and a .env
file) override them.
"""

import logging
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

load_dotenv()

SETTINGS_PATH = Path(__file__).parent.parent / "config" / "verifier.yaml"

# environment variable -> settings field
ENV_OVERRIDES = {
    "GAMMA_GRID_LEVELS": "grid_levels",
    "GAMMA_WORKERS": "workers",
    "GAMMA_CACHE_DIR": "cache_dir",
    "GAMMA_CACHE_TTL": "cache_ttl_seconds",
    "GAMMA_LOG_LEVEL": "log_level",
}


@dataclass
class VerifierSettings:
    """Guards, budgets and defaults for enumeration and verification"""
    grid_levels: int = 3  # {0, 1/2, 1}
    family_budget: int = 200_000  # grid fuzzy subsets per instance before sampling
    subset_guard: int = 20
    endomorphism_guard: int = 8
    canonical_guard_n: int = 6
    canonical_guard_m: int = 3
    exhaustive_budget: int = 2_000_000  # candidate tables per (n, m)
    lemma_subset_guard: int = 4
    morphism_check_guard: int = 3
    power_exponents: List[int] = field(default_factory=lambda: [0, 1, 2, 3])
    workers: int = 1
    cache_dir: str = ""  # empty disables the result cache
    cache_ttl_seconds: int = 86_400
    log_level: str = "WARNING"
    report_version: str = "1.0"
    seed: int = 0

    @classmethod
    def from_mapping(cls, values: Dict[str, Any]) -> "VerifierSettings":
        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(values) - set(known))
        if unknown:
            raise ValueError(f"Unknown verifier settings: {', '.join(unknown)}")
        return cls(**values)


def load_settings_file(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Load the settings mapping from YAML.

    Returns:
        Dictionary of settings values (empty when the file has no content)
    """
    path = Path(path) if path is not None else SETTINGS_PATH
    try:
        with open(path, "r") as f:
            values = yaml.safe_load(f)
    except FileNotFoundError:
        raise FileNotFoundError(
            f"Verifier settings file not found at {path}. "
            "Please ensure config/verifier.yaml exists."
        )
    except yaml.YAMLError as e:
        raise ValueError(f"Error parsing verifier settings YAML: {e}")
    return values or {}


def _coerce(name: str, raw: str) -> Any:
    default = VerifierSettings.__dataclass_fields__[name].default
    if isinstance(default, int):
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"Environment override for {name} must be an integer, got '{raw}'")
    return raw


def load_settings(path: Optional[Path] = None, environ: Optional[Dict[str, str]] = None) -> VerifierSettings:
    """YAML defaults, then environment overrides."""
    values = load_settings_file(path)
    environ = os.environ if environ is None else environ
    for variable, name in ENV_OVERRIDES.items():
        if variable in environ:
            values[name] = _coerce(name, environ[variable])
            logger.debug(f"[settings] {name} overridden by {variable}")
    return VerifierSettings.from_mapping(values)


# Global settings instance
_settings: Optional[VerifierSettings] = None


def get_settings() -> VerifierSettings:
    """Get or load the global settings"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def configure_settings(settings: VerifierSettings):
    """Replace the global settings"""
    global _settings
    _settings = settings


def reset_settings():
    """Reset settings (for testing)"""
    global _settings
    _settings = None
