"""
Shared fixtures for the unit tests.
"""
import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from tools.instance_factory import named  # noqa: E402
from util.settings import VerifierSettings, configure_settings, reset_settings  # noqa: E402


@pytest.fixture
def lz2():
    """Left-zero Γ-semigroup on {0, 1}, |Γ| = 1: xγy = x."""
    return named("LZ2")


@pytest.fixture
def rz2():
    return named("RZ2")


@pytest.fixture
def mod3():
    """Z₃ with Γ = {1, 2}: xγy = x·γ·y mod 3."""
    return named("MOD3")


@pytest.fixture
def z2group():
    return named("Z2GROUP")


@pytest.fixture(autouse=True, scope="session")
def default_settings():
    """Run on the built-in defaults, independent of .env and YAML edits."""
    configure_settings(VerifierSettings())
    yield
    reset_settings()
