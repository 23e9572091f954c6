"""
Fuzzy subsets of a finite Γ-semigroup.

Grades are exact ``fractions.Fraction`` values in [0, 1]. The module provides
the pointwise lattice operations, sup-min composition, characteristic
functions, level sets, integer powers and the fuzzy ideal predicates for every
IdealKind, plus the two pointwise reformulations of the fuzzy quasi ideal
condition.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Literal, Optional, Tuple, Union

from tools.core_algebra import ElementSubset, GammaSemigroup, IdealKind, check_crisp
from tools.errors import EmptySubsetError, GammaAlgebraError, InvalidGradeError, StructureMismatchError

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)

GradeLike = Union[Fraction, int, str]


def parse_grade(value: GradeLike) -> Fraction:
    """Parse "p/q", an integer, a decimal string or a Fraction into a grade in [0, 1]."""
    if isinstance(value, bool):
        raise InvalidGradeError(f"invalid grade {value!r}")
    try:
        if isinstance(value, float):
            grade = Fraction(str(value))
        else:
            grade = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise InvalidGradeError(f"invalid grade {value!r}") from None
    if not ZERO <= grade <= ONE:
        raise InvalidGradeError(f"grade {grade} outside [0, 1]")
    return grade


def format_grade(grade: Fraction) -> str:
    """Canonical text form: "0", "1" or "p/q"."""
    return str(grade)


@dataclass(frozen=True)
class GradeGrid:
    """Finite ascending chain of grades containing 0 and 1."""

    levels: Tuple[Fraction, ...]

    def __post_init__(self):
        levels = tuple(sorted({parse_grade(v) for v in self.levels}))
        if not levels or levels[0] != ZERO or levels[-1] != ONE:
            raise InvalidGradeError("grade grid must contain 0 and 1")
        object.__setattr__(self, "levels", levels)

    @classmethod
    def uniform(cls, count: int) -> "GradeGrid":
        """{0, 1/(count-1), …, 1}"""
        if count < 2:
            raise InvalidGradeError(f"a grid needs at least 2 levels, got {count}")
        return cls(tuple(Fraction(i, count - 1) for i in range(count)))

    @classmethod
    def complete_for(cls, n: int) -> "GradeGrid":
        """n+1 levels: exhaustive up to order-equivalence on an n-element carrier."""
        return cls.uniform(n + 1)

    @classmethod
    def default(cls) -> "GradeGrid":
        return cls.uniform(3)

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.levels)

    def __contains__(self, grade: object) -> bool:
        return grade in self.levels

    def describe(self) -> str:
        return "{" + ", ".join(format_grade(g) for g in self.levels) + "}"


@dataclass(frozen=True)
class FuzzySubset:
    """A map S → [0, 1] bound to one Γ-semigroup."""

    structure: GammaSemigroup
    grades: Tuple[Fraction, ...]

    def __post_init__(self):
        grades = tuple(parse_grade(g) for g in self.grades)
        if len(grades) != self.structure.n:
            raise GammaAlgebraError(f"expected {self.structure.n} grades, got {len(grades)}")
        object.__setattr__(self, "grades", grades)

    @classmethod
    def constant(cls, structure: GammaSemigroup, value: GradeLike) -> "FuzzySubset":
        grade = parse_grade(value)
        return cls(structure, tuple(grade for _ in structure.elements))

    def __getitem__(self, element: int) -> Fraction:
        return self.grades[element]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.grades)

    def support(self) -> ElementSubset:
        return ElementSubset(self.structure, frozenset(x for x, g in enumerate(self.grades) if g > ZERO))

    def is_empty(self) -> bool:
        return all(g == ZERO for g in self.grades)

    def is_constant(self, on: Optional[Iterable[int]] = None) -> bool:
        values = {self.grades[x] for x in (self.structure.elements if on is None else on)}
        return len(values) <= 1

    def image_values(self) -> Tuple[Fraction, ...]:
        """Im(μ), ascending."""
        return tuple(sorted(set(self.grades)))

    def to_text(self) -> str:
        """Whitespace-separated grades, the fuzzy file format."""
        return " ".join(format_grade(g) for g in self.grades)

    def __str__(self) -> str:
        return "(" + ", ".join(format_grade(g) for g in self.grades) + ")"


def _same(mu: FuzzySubset, sigma: FuzzySubset) -> None:
    if mu.structure != sigma.structure:
        raise StructureMismatchError("fuzzy subsets belong to different Γ-semigroups")


def combine(op: Literal["meet", "join"], mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
    _same(mu, sigma)
    if op == "meet":
        pick = min
    elif op == "join":
        pick = max
    else:
        raise GammaAlgebraError(f"unknown lattice operation '{op}' (expected meet or join)")
    return FuzzySubset(mu.structure, tuple(pick(a, b) for a, b in zip(mu.grades, sigma.grades)))


def meet(mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
    return combine("meet", mu, sigma)


def join(mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
    return combine("join", mu, sigma)


def compose(mu: FuzzySubset, sigma: FuzzySubset) -> FuzzySubset:
    """
    Sup-min composition.

    (μ∘σ)(x) = max over factorizations x = yγz of min(μ(y), σ(z)), and 0 when x
    has no factorization.
    """
    _same(mu, sigma)
    left, right = mu.grades, sigma.grades
    grades = tuple(
        max((min(left[y], right[z]) for y, z in pairs), default=ZERO) for pairs in mu.structure.factorizations
    )
    return FuzzySubset(mu.structure, grades)


def compose_many(*subsets: FuzzySubset) -> FuzzySubset:
    result = subsets[0]
    for other in subsets[1:]:
        result = compose(result, other)
    return result


def characteristic(subset: ElementSubset) -> FuzzySubset:
    return FuzzySubset(subset.structure, tuple(ONE if x in subset else ZERO for x in subset.structure.elements))


def whole(structure: GammaSemigroup) -> FuzzySubset:
    """χ, the characteristic function of S."""
    return FuzzySubset.constant(structure, ONE)


def leq(mu: FuzzySubset, sigma: FuzzySubset) -> bool:
    _same(mu, sigma)
    return all(a <= b for a, b in zip(mu.grades, sigma.grades))


def eq(mu: FuzzySubset, sigma: FuzzySubset) -> bool:
    _same(mu, sigma)
    return mu.grades == sigma.grades


def power(mu: FuzzySubset, k: int) -> FuzzySubset:
    if k < 0 or int(k) != k:
        raise GammaAlgebraError(f"power exponent must be a non-negative integer, got {k}")
    return FuzzySubset(mu.structure, tuple(g ** int(k) for g in mu.grades))


def level_set(mu: FuzzySubset, t: GradeLike) -> ElementSubset:
    """μ_t = {x : μ(x) ≥ t}"""
    threshold = parse_grade(t)
    return ElementSubset(mu.structure, frozenset(x for x, g in enumerate(mu.grades) if g >= threshold))


def level_sets_satisfy(kind: "str | IdealKind", mu: FuzzySubset) -> bool:
    """True iff every cut μ_t, t ∈ Im(μ), passes the crisp predicate."""
    return all(check_crisp(kind, level_set(mu, t)) for t in mu.image_values())


def _sandwich_tuple(structure: GammaSemigroup, x: int, y: int, target: int) -> Tuple[int, int, int, int, int]:
    cells = structure.cells
    for beta in structure.gammas:
        for s in structure.elements:
            for gamma in structure.gammas:
                if cells[cells[x][beta][s]][gamma][y] == target:
                    return (x, beta, s, gamma, y)
    raise AssertionError("sandwich index out of sync with the table")


def _subsemigroup_violation(mu: FuzzySubset) -> Optional[Tuple[int, ...]]:
    cells, g = mu.structure.cells, mu.grades
    for x in mu.structure.elements:
        for gamma in mu.structure.gammas:
            for y, p in enumerate(cells[x][gamma]):
                if g[p] < min(g[x], g[y]):
                    return (x, gamma, y)
    return None


def find_fuzzy_violation(kind: "str | IdealKind", mu: FuzzySubset) -> Optional[Tuple[int, ...]]:
    """
    First quantifier tuple violating the fuzzy ideal condition of ``kind``.

    Tuples are (x, γ, y) for subsemigroup/left/right/two_sided, (x, β, s, γ, y)
    for bi, (x, α, ω, β, y, γ, z) for one_two and (x,) for quasi.
    """
    kind = IdealKind.parse(kind)
    if mu.is_empty():
        raise EmptySubsetError(f"fuzzy {kind.value} predicate requires a fuzzy subset with non-empty support")
    structure, g = mu.structure, mu.grades
    cells = structure.cells

    if kind is IdealKind.QUASI:
        chi = whole(structure)
        bound = meet(compose(mu, chi), compose(chi, mu))
        for x in structure.elements:
            if bound[x] > g[x]:
                return (x,)
        return None

    if kind in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED):
        for x in structure.elements:
            for gamma in structure.gammas:
                for y, p in enumerate(cells[x][gamma]):
                    if kind is not IdealKind.RIGHT and g[p] < g[y]:
                        return (x, gamma, y)
                    if kind is not IdealKind.LEFT and g[p] < g[x]:
                        return (x, gamma, y)
        return None

    violation = _subsemigroup_violation(mu)
    if violation is not None or kind is IdealKind.SUBSEMIGROUP:
        return violation

    sandwiches = structure.sandwiches
    if kind is IdealKind.BI:
        for x in structure.elements:
            for y in structure.elements:
                floor = min(g[x], g[y])
                for p in sorted(sandwiches[x][y]):
                    if g[p] < floor:
                        return _sandwich_tuple(structure, x, y, p)
        return None

    # one_two: μ(xαωβ(yγz)) ≥ min{μ(x), μ(y), μ(z)}
    for x in structure.elements:
        for y in structure.elements:
            for gamma in structure.gammas:
                for z, w in enumerate(cells[y][gamma]):
                    floor = min(g[x], g[y], g[z])
                    for p in sorted(sandwiches[x][w]):
                        if g[p] < floor:
                            _, alpha, omega, beta, _ = _sandwich_tuple(structure, x, w, p)
                            return (x, alpha, omega, beta, y, gamma, z)
    return None


def check_fuzzy(kind: "str | IdealKind", mu: FuzzySubset) -> bool:
    violation = find_fuzzy_violation(kind, mu)
    if violation is not None:
        logger.debug(f"[check_fuzzy] {IdealKind.parse(kind).value} fails for {mu} at {violation}")
    return violation is None


def check_fuzzy_quasi_pointwise(mu: FuzzySubset, variant: Literal["min", "maxmin"] = "min") -> bool:
    """
    Quasi ideal condition stated pointwise over factorizations.

    min:    μ(x) ≥ min{μ(b), μ(c)} whenever x = bαs and x = tβc
    maxmin: μ(x) ≥ max{min{μ(b), μ(c)}, min{μ(t), μ(s)}} for the same pairs
    """
    if mu.is_empty():
        raise EmptySubsetError("fuzzy quasi predicate requires a fuzzy subset with non-empty support")
    if variant not in ("min", "maxmin"):
        raise GammaAlgebraError(f"unknown pointwise variant '{variant}' (expected min or maxmin)")
    g = mu.grades
    for x, pairs in enumerate(mu.structure.factorizations):
        for b, s in pairs:
            for t, c in pairs:
                bound = min(g[b], g[c])
                if variant == "maxmin":
                    bound = max(bound, min(g[t], g[s]))
                if g[x] < bound:
                    return False
    return True
