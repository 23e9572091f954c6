"""
Homomorphisms between Γ-semigroups sharing the same Γ, and transport of fuzzy
subsets along them (pullback, pushforward, endomorphism transport).
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from tools.core_algebra import GammaSemigroup, ValidationResult
from tools.errors import GammaAlgebraError, GuardExceededError, NotSurjectiveError, StructureMismatchError
from tools.fuzzy_engine import ZERO, FuzzySubset

logger = logging.getLogger(__name__)

ENDOMORPHISM_GUARD = 8


@dataclass(frozen=True)
class Homomorphism:
    """Carrier map f with f(xγy) = f(x)γf(y); build through ``validate_hom``."""

    source: GammaSemigroup
    target: GammaSemigroup
    mapping: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.n

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == self.source.n

    @property
    def bijective(self) -> bool:
        return self.surjective and self.injective

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def to_text(self) -> str:
        """Image of each source element, the homomorphism file format."""
        return " ".join(str(v) for v in self.mapping)


def _check_arity(source: GammaSemigroup, target: GammaSemigroup, mapping: Sequence[int]) -> Tuple[int, ...]:
    if source.m != target.m:
        raise StructureMismatchError(f"source has |Γ|={source.m} but target has |Γ|={target.m}")
    if len(mapping) != source.n:
        raise GammaAlgebraError(f"map must give {source.n} images, got {len(mapping)}")
    images = tuple(int(v) for v in mapping)
    outside = [v for v in images if not 0 <= v < target.n]
    if outside:
        raise GammaAlgebraError(f"images {outside} outside target carrier 0..{target.n - 1}")
    return images


def hom_violations(source: GammaSemigroup, target: GammaSemigroup, images: Sequence[int]) -> List[Tuple[int, int, int]]:
    """(x, γ, y) triples where f(xγy) ≠ f(x)γf(y)."""
    f = np.asarray(images, dtype=np.int64)
    lhs = f[source.table]
    rhs = target.table[f[:, None, None], np.arange(source.m)[None, :, None], f[None, None, :]]
    return [tuple(int(i) for i in idx) for idx in np.argwhere(lhs != rhs)]


def validate_hom(source: GammaSemigroup, target: GammaSemigroup, mapping: Sequence[int]) -> ValidationResult[Homomorphism]:
    images = _check_arity(source, target, mapping)
    violations = hom_violations(source, target, images)
    if violations:
        return ValidationResult(value=None, violations=tuple(violations))
    return ValidationResult(value=Homomorphism(source, target, images))


def identity_hom(structure: GammaSemigroup) -> Homomorphism:
    return Homomorphism(structure, structure, tuple(structure.elements))


def constant_hom(structure: GammaSemigroup, e: int) -> Homomorphism:
    """Constant map to e; a homomorphism only when eγe = e for every γ."""
    result = validate_hom(structure, structure, [e] * structure.n)
    if not result.ok:
        raise GammaAlgebraError(f"constant map to {e} is not an endomorphism (eγe ≠ e for some γ)")
    return result.value


def enumerate_endomorphisms(structure: GammaSemigroup, guard: int = ENDOMORPHISM_GUARD) -> List[Homomorphism]:
    """All self-maps passing validate_hom, in lexicographic order of the image tuple."""
    if structure.n > guard:
        raise GuardExceededError(f"endomorphism enumeration needs n ≤ {guard}, got n={structure.n}")
    endomorphisms = [
        Homomorphism(structure, structure, images)
        for images in product(structure.elements, repeat=structure.n)
        if not hom_violations(structure, structure, images)
    ]
    logger.debug(f"[morphisms] 🔍 {len(endomorphisms)} endomorphisms of {structure!r}")
    return endomorphisms


def _partitions(n: int) -> Iterator[Tuple[int, ...]]:
    """Set partitions of 0..n-1 as restricted growth strings, lexicographic."""
    labels = [0] * n

    def extend(i: int, top: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            yield tuple(labels)
            return
        for label in range(top + 2):
            labels[i] = label
            yield from extend(i + 1, max(top, label))

    if n:
        yield from extend(1, 0)


def quotient_by(structure: GammaSemigroup, labels: Sequence[int]) -> Optional[Homomorphism]:
    """
    Projection onto S/~ for the partition given by class labels, or None when
    ~ is not a congruence. Class c of the quotient holds the elements labelled c.
    """
    if len(labels) != structure.n or sorted(set(labels)) != list(range(max(labels, default=-1) + 1)):
        raise GammaAlgebraError(f"class labels must give {structure.n} entries covering 0..k-1, got {list(labels)}")
    labels = np.asarray(labels, dtype=np.int64)
    classes = int(labels.max()) + 1
    representatives = np.array([int(np.argmax(labels == c)) for c in range(classes)])
    quotient_table = labels[structure.table[np.ix_(representatives, np.arange(structure.m), representatives)]]
    lifted = quotient_table[labels[:, None, None], np.arange(structure.m)[None, :, None], labels[None, None, :]]
    if not np.array_equal(labels[structure.table], lifted):
        return None
    return Homomorphism(structure, GammaSemigroup(quotient_table), tuple(int(v) for v in labels))


def enumerate_quotients(structure: GammaSemigroup, guard: int = ENDOMORPHISM_GUARD) -> List[Homomorphism]:
    """Projections onto every quotient by a congruence, identity partition first."""
    if structure.n > guard:
        raise GuardExceededError(f"congruence enumeration needs n ≤ {guard}, got n={structure.n}")
    projections = [p for p in (quotient_by(structure, labels) for labels in _partitions(structure.n)) if p is not None]
    projections.sort(key=lambda p: -p.target.n)
    logger.debug(f"[morphisms] 🔍 {len(projections)} congruences of {structure!r}")
    return projections


def pullback(f: Homomorphism, lam: FuzzySubset) -> FuzzySubset:
    """(f⁻¹λ)(x) = λ(f(x))"""
    if lam.structure != f.target:
        raise StructureMismatchError("pullback needs a fuzzy subset of the homomorphism's target")
    return FuzzySubset(f.source, tuple(lam[f(x)] for x in f.source.elements))


def pushforward(f: Homomorphism, mu: FuzzySubset) -> FuzzySubset:
    """(fμ)(y) = max{μ(x) : f(x) = y}; f must be onto."""
    if mu.structure != f.source:
        raise StructureMismatchError("pushforward needs a fuzzy subset of the homomorphism's source")
    if not f.surjective:
        raise NotSurjectiveError(f"pushforward requires a surjective homomorphism, image is {sorted(set(f.mapping))}")
    grades = [ZERO] * f.target.n
    for x, y in enumerate(f.mapping):
        grades[y] = max(grades[y], mu[x])
    return FuzzySubset(f.target, tuple(grades))


def endo_transport(theta: Homomorphism, mu: FuzzySubset) -> FuzzySubset:
    """μ[θ](x) = μ(θ(x)) for an endomorphism θ."""
    if not theta.is_endomorphism or mu.structure != theta.source:
        raise StructureMismatchError("endo_transport needs an endomorphism of the fuzzy subset's structure")
    return pullback(theta, mu)
