"""Theorem verifier: catalog, grid families, checks, orchestration and reports."""
