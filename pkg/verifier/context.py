"""
Per-instance memo shared by all theorem checks: classification, the grid family,
its per-kind filters, crisp ideals, endomorphisms, quotients and composition results.
"""

import logging
from functools import cached_property
from typing import Dict, Optional, Tuple

from tools.core_algebra import ElementSubset, GammaSemigroup, IdealKind, StructureProfile, classify, enumerate_crisp
from tools.errors import GuardExceededError
from tools.fuzzy_engine import FuzzySubset, GradeGrid, check_fuzzy, compose, whole
from tools.morphisms import Homomorphism, enumerate_endomorphisms, enumerate_quotients
from util.settings import VerifierSettings, get_settings
from verifier.families import FuzzyFamily, build_family

logger = logging.getLogger(__name__)


class VerificationContext:
    """Everything the checks need about one instance, computed at most once."""

    def __init__(
        self,
        structure: GammaSemigroup,
        grid: GradeGrid,
        instance_id: str = "adhoc",
        settings: Optional[VerifierSettings] = None,
    ):
        self.structure = structure
        self.grid = grid
        self.instance_id = instance_id
        self.settings = settings or get_settings()
        self._holds: Dict[Tuple[IdealKind, tuple], bool] = {}
        self._members: Dict[IdealKind, Tuple[FuzzySubset, ...]] = {}
        self._crisp: Dict[IdealKind, Tuple[ElementSubset, ...]] = {}
        self._compositions: Dict[Tuple[tuple, tuple], FuzzySubset] = {}

    @cached_property
    def profile(self) -> StructureProfile:
        return classify(self.structure)

    @cached_property
    def family(self) -> FuzzyFamily:
        return build_family(self.structure, self.grid, budget=self.settings.family_budget, seed=self.settings.seed)

    @cached_property
    def chi(self) -> FuzzySubset:
        return whole(self.structure)

    @cached_property
    def subsets(self) -> Tuple[ElementSubset, ...]:
        """All non-empty subsets in ascending mask order."""
        if self.structure.n > self.settings.subset_guard:
            raise GuardExceededError(f"subset enumeration needs n ≤ {self.settings.subset_guard}, got n={self.structure.n}")
        return tuple(ElementSubset.from_mask(self.structure, mask) for mask in range(1, 1 << self.structure.n))

    @cached_property
    def endomorphisms(self) -> Tuple[Homomorphism, ...]:
        guard = min(self.settings.morphism_check_guard, self.settings.endomorphism_guard)
        if self.structure.n > guard:
            raise GuardExceededError(f"transport checks run over endomorphisms only when n ≤ {guard}, got n={self.structure.n}")
        return tuple(enumerate_endomorphisms(self.structure, guard=guard))

    @cached_property
    def bijective_endomorphisms(self) -> Tuple[Homomorphism, ...]:
        return tuple(f for f in self.endomorphisms if f.bijective)

    @cached_property
    def surjective_homomorphisms(self) -> Tuple[Homomorphism, ...]:
        """
        Automorphisms followed by the projection onto every proper quotient.
        Every surjective homomorphism out of S is one of these up to relabeling
        the target.
        """
        projections = enumerate_quotients(self.structure, guard=self.settings.morphism_check_guard)
        return self.bijective_endomorphisms + tuple(p for p in projections if not p.injective)

    def holds(self, kind: "str | IdealKind", mu: FuzzySubset) -> bool:
        """μ has non-empty support and satisfies the fuzzy predicate."""
        kind = IdealKind.parse(kind)
        key = (kind, mu.grades)
        if key not in self._holds:
            self._holds[key] = not mu.is_empty() and check_fuzzy(kind, mu)
        return self._holds[key]

    def members(self, kind: "Optional[str | IdealKind]" = None) -> Tuple[FuzzySubset, ...]:
        """F, or F[kind] = family members passing the fuzzy predicate."""
        if kind is None:
            return self.family.members
        kind = IdealKind.parse(kind)
        if kind not in self._members:
            self._members[kind] = tuple(mu for mu in self.family.members if self.holds(kind, mu))
        return self._members[kind]

    def crisp_ideals(self, kind: "str | IdealKind") -> Tuple[ElementSubset, ...]:
        kind = IdealKind.parse(kind)
        if kind not in self._crisp:
            self._crisp[kind] = tuple(enumerate_crisp(kind, self.structure, guard=self.settings.subset_guard))
        return self._crisp[kind]

    def compose(self, mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
        key = (mu.grades, sigma.grades)
        if key not in self._compositions:
            self._compositions[key] = compose(mu, sigma)
        return self._compositions[key]
