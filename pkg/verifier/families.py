"""
Grid families of fuzzy subsets: every non-zero grade assignment from a GradeGrid,
or, past the budget, every characteristic function followed by seeded samples.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Tuple

import numpy as np

from tools.core_algebra import ElementSubset, GammaSemigroup, IdealKind
from tools.fuzzy_engine import ZERO, FuzzySubset, GradeGrid, characteristic, check_fuzzy

logger = logging.getLogger(__name__)

FAMILY_BUDGET = 200_000


def family_total(structure: GammaSemigroup, grid: GradeGrid) -> int:
    return len(grid) ** structure.n - 1


def _exhaustive(structure: GammaSemigroup, grid: GradeGrid) -> Iterator[FuzzySubset]:
    for grades in product(grid.levels, repeat=structure.n):
        if any(g > ZERO for g in grades):
            yield FuzzySubset(structure, grades)


def _truncated(structure: GammaSemigroup, grid: GradeGrid, budget: int, seed: int) -> Iterator[FuzzySubset]:
    seen = set()
    for mask in range(1, 1 << structure.n):
        mu = characteristic(ElementSubset.from_mask(structure, mask))
        seen.add(mu.grades)
        yield mu
        if len(seen) >= budget:
            return
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(structure.n, structure.m, len(grid))))
    while len(seen) < budget:
        picks = rng.integers(0, len(grid), size=structure.n)
        grades = tuple(grid.levels[int(i)] for i in picks)
        if grades in seen or all(g == ZERO for g in grades):
            continue
        seen.add(grades)
        yield FuzzySubset(structure, grades)


def enumerate_fuzzy_family(
    structure: GammaSemigroup,
    grid: GradeGrid,
    kind: "Optional[str | IdealKind]" = None,
    budget: int = FAMILY_BUDGET,
    seed: int = 0,
) -> Iterator[FuzzySubset]:
    """
    Stream the grid family in deterministic order, optionally filtered by check_fuzzy(kind).

    Exhaustive order is lexicographic in the grade tuple.
    """
    if family_total(structure, grid) <= budget:
        members = _exhaustive(structure, grid)
    else:
        members = _truncated(structure, grid, budget, seed)
    if kind is None:
        return members
    return (mu for mu in members if check_fuzzy(kind, mu))


@dataclass(frozen=True)
class FuzzyFamily:
    grid: GradeGrid
    members: Tuple[FuzzySubset, ...]
    truncated: bool

    def __len__(self) -> int:
        return len(self.members)

    def describe(self) -> str:
        suffix = " (truncated)" if self.truncated else ""
        return f"grid {self.grid.describe()}, {len(self.members)} members{suffix}"


def build_family(structure: GammaSemigroup, grid: GradeGrid, budget: int = FAMILY_BUDGET, seed: int = 0) -> FuzzyFamily:
    truncated = family_total(structure, grid) > budget
    if truncated:
        logger.warning(
            f"[families] ⚠️ {family_total(structure, grid)} grid fuzzy subsets exceed budget {budget}, "
            f"sampling after characteristic functions"
        )
    members = tuple(enumerate_fuzzy_family(structure, grid, budget=budget, seed=seed))
    return FuzzyFamily(grid=grid, members=members, truncated=truncated)
