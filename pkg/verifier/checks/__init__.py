"""Check functions, registered with the catalog on import."""

from verifier.checks import quasi_checks, structure_checks, subsemigroup_checks

__all__ = ["quasi_checks", "structure_checks", "subsemigroup_checks"]
