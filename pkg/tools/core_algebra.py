"""
Crisp algebra of finite Γ-semigroups.

A Γ-semigroup is stored as a ternary Cayley table ``table[x, γ, y] = xγy`` over
element indices 0..n-1 and parameter indices 0..m-1. This module validates
tables, multiplies subsets, tests the ideal predicates (subsemigroup, left,
right, two-sided, bi, (1,2), quasi), generates principal ideals by closure,
enumerates all ideals of a kind and classifies the structure (regularity,
simplicity, duo and zero properties, idempotents).

All values are immutable; every function here is pure.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Generic, Iterable, Iterator, List, NamedTuple, Optional, Tuple, TypeVar

import numpy as np

from tools.errors import (
    EmptySubsetError,
    GammaAlgebraError,
    GuardExceededError,
    StructureMismatchError,
    StructureShapeError,
)

logger = logging.getLogger(__name__)

# 2^n - 1 candidate subsets must stay enumerable
SUBSET_GUARD = 20

T = TypeVar("T")


class IdealKind(str, Enum):
    """Kinds of (crisp or fuzzy) ideal understood by the predicates."""

    SUBSEMIGROUP = "subsemigroup"
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"
    BI = "bi"
    ONE_TWO = "one_two"
    QUASI = "quasi"

    @classmethod
    def parse(cls, value: "str | IdealKind") -> "IdealKind":
        if isinstance(value, IdealKind):
            return value
        try:
            return cls(str(value).strip().lower().replace("-", "_"))
        except ValueError:
            valid = ", ".join(kind.value for kind in cls)
            raise GammaAlgebraError(f"Unknown ideal kind '{value}'. Valid kinds: {valid}") from None


GENERATED_KINDS = (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED, IdealKind.QUASI)


@dataclass(frozen=True, eq=False)
class GammaSemigroup:
    """
    Finite Γ-semigroup given by its Cayley table.

    The constructor only checks shape and range; use ``validate`` to obtain a
    structure whose associativity has been verified.
    """

    table: np.ndarray

    def __post_init__(self):
        array = _as_table_array(self.table)
        array.setflags(write=False)
        object.__setattr__(self, "table", array)

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    @property
    def m(self) -> int:
        return int(self.table.shape[1])

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def gammas(self) -> range:
        return range(self.m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GammaSemigroup):
            return NotImplemented
        return self.table.shape == other.table.shape and bool(np.array_equal(self.table, other.table))

    def __hash__(self) -> int:
        return hash((self.table.shape, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"GammaSemigroup(n={self.n}, m={self.m})"

    @cached_property
    def cells(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """Nested tuples ``cells[x][γ][y]`` for fast scalar lookups."""
        return tuple(tuple(tuple(row) for row in block) for block in self.table.tolist())

    def mul(self, x: int, gamma: int, y: int) -> int:
        return self.cells[x][gamma][y]

    @cached_property
    def factorizations(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """For each x, the distinct pairs (y, z) with yγz = x for some γ."""
        pairs: List[set] = [set() for _ in self.elements]
        for y in self.elements:
            for gamma in self.gammas:
                for z, x in enumerate(self.cells[y][gamma]):
                    pairs[x].add((y, z))
        return tuple(tuple(sorted(p)) for p in pairs)

    @cached_property
    def sandwiches(self) -> Tuple[Tuple[FrozenSet[int], ...], ...]:
        """``sandwiches[x][y]`` = xΓSΓy = {xβsγy}."""
        cells = self.cells
        left_factors = [
            {cells[x][beta][s] for beta in self.gammas for s in self.elements} for x in self.elements
        ]
        return tuple(
            tuple(frozenset(cells[p][gamma][y] for p in left_factors[x] for gamma in self.gammas) for y in self.elements)
            for x in self.elements
        )

    @cached_property
    def full(self) -> "ElementSubset":
        return ElementSubset(self, frozenset(self.elements))

    def serialize(self) -> Tuple[int, ...]:
        """Table entries in γ-major order (block γ, row x, column y), the file order."""
        return tuple(int(v) for v in self.table.transpose(1, 0, 2).ravel())

    def to_blocks(self) -> List[List[List[int]]]:
        """γ-major nested lists ``blocks[γ][x][y]``."""
        return self.table.transpose(1, 0, 2).tolist()


def _as_table_array(table_data) -> np.ndarray:
    try:
        array = np.array(table_data, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise StructureShapeError(f"table is not a rectangular integer array: {e}") from None
    if array.ndim != 3 or array.shape[0] != array.shape[2]:
        raise StructureShapeError(f"table must have shape n×m×n, got {array.shape}")
    n, m, _ = array.shape
    if n < 1 or m < 1:
        raise StructureShapeError(f"carrier and Γ must be non-empty, got n={n}, m={m}")
    bad = np.argwhere((array < 0) | (array >= n))
    if len(bad):
        coordinates = [tuple(int(i) for i in row) for row in bad]
        listing = ", ".join(f"({x},{g},{y})={int(array[x, g, y])}" for x, g, y in coordinates)
        raise StructureShapeError(f"entries outside 0..{n - 1} at {listing}", coordinates)
    return array


class AssociativityViolation(NamedTuple):
    """(xβy)γz = lhs differs from xβ(yγz) = rhs."""

    x: int
    beta: int
    y: int
    gamma: int
    z: int
    lhs: int
    rhs: int

    def to_line(self) -> str:
        return " ".join(str(v) for v in self)


@dataclass(frozen=True)
class ValidationResult(Generic[T]):
    """Either a validated value or the complete list of violations."""

    value: Optional[T]
    violations: Tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def associativity_violations(table: np.ndarray) -> List[AssociativityViolation]:
    n, m, _ = table.shape
    xs = np.arange(n)[:, None, None, None, None]
    bs = np.arange(m)[None, :, None, None, None]
    ys = np.arange(n)[None, None, :, None, None]
    gs = np.arange(m)[None, None, None, :, None]
    zs = np.arange(n)[None, None, None, None, :]
    lhs = table[table[xs, bs, ys], gs, zs]
    rhs = table[xs, bs, table[ys, gs, zs]]
    lhs, rhs = np.broadcast_arrays(lhs, rhs)
    return [
        AssociativityViolation(*(int(i) for i in idx), int(lhs[tuple(idx)]), int(rhs[tuple(idx)]))
        for idx in np.argwhere(lhs != rhs)
    ]


def associative_mask(tables: np.ndarray) -> np.ndarray:
    """Vectorized associativity test over a stack of tables of shape (K, n, m, n)."""
    k, n, m, _ = tables.shape
    ks = np.arange(k)[:, None, None, None, None, None]
    xs = np.arange(n)[None, :, None, None, None, None]
    bs = np.arange(m)[None, None, :, None, None, None]
    ys = np.arange(n)[None, None, None, :, None, None]
    gs = np.arange(m)[None, None, None, None, :, None]
    zs = np.arange(n)[None, None, None, None, None, :]
    lhs = tables[ks, tables[ks, xs, bs, ys], gs, zs]
    rhs = tables[ks, xs, bs, tables[ks, ys, gs, zs]]
    return (lhs == rhs).reshape(k, -1).all(axis=1)


def validate(table_data) -> ValidationResult[GammaSemigroup]:
    """
    Validate a Cayley table.

    Raises StructureShapeError for shape problems and out-of-range entries
    (all coordinates reported); returns every associativity violation otherwise.
    """
    structure = GammaSemigroup(table_data)
    violations = associativity_violations(structure.table)
    if violations:
        logger.debug(f"[validate] ❌ {len(violations)} associativity violations (n={structure.n}, m={structure.m})")
        return ValidationResult(value=None, violations=tuple(violations))
    return ValidationResult(value=structure)


@dataclass(frozen=True)
class ElementSubset:
    """A subset of the carrier of a specific Γ-semigroup."""

    structure: GammaSemigroup
    members: FrozenSet[int] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(int(i) for i in self.members)
        outside = sorted(i for i in members if not 0 <= i < self.structure.n)
        if outside:
            raise GammaAlgebraError(f"element indices {outside} outside 0..{self.structure.n - 1}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_indices(cls, structure: GammaSemigroup, indices: Iterable[int]) -> "ElementSubset":
        return cls(structure, frozenset(indices))

    @classmethod
    def from_mask(cls, structure: GammaSemigroup, mask: int) -> "ElementSubset":
        return cls(structure, frozenset(i for i in structure.elements if mask >> i & 1))

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def is_empty(self) -> bool:
        return not self.members

    def _same(self, other: "ElementSubset") -> None:
        if self.structure != other.structure:
            raise StructureMismatchError("subsets belong to different Γ-semigroups")

    def __or__(self, other: "ElementSubset") -> "ElementSubset":
        self._same(other)
        return ElementSubset(self.structure, self.members | other.members)

    def __and__(self, other: "ElementSubset") -> "ElementSubset":
        self._same(other)
        return ElementSubset(self.structure, self.members & other.members)

    def __le__(self, other: "ElementSubset") -> bool:
        self._same(other)
        return self.members <= other.members

    def complement(self) -> "ElementSubset":
        return ElementSubset(self.structure, frozenset(self.structure.elements) - self.members)

    def to_text(self) -> str:
        """Comma-separated indices, the command-line subset format."""
        return ",".join(str(i) for i in self)

    def __str__(self) -> str:
        return "{" + self.to_text() + "}"


def subset_product(a: ElementSubset, b: ElementSubset) -> ElementSubset:
    """AΓB = {aγb : a ∈ A, γ ∈ Γ, b ∈ B}."""
    a._same(b)
    structure = a.structure
    if a.is_empty() or b.is_empty():
        return ElementSubset(structure, frozenset())
    block = structure.table[np.ix_(sorted(a.members), list(structure.gammas), sorted(b.members))]
    return ElementSubset(structure, frozenset(int(v) for v in np.unique(block)))


def product_chain(*subsets: ElementSubset) -> ElementSubset:
    """A1ΓA2Γ…ΓAk, folded from the left."""
    result = subsets[0]
    for other in subsets[1:]:
        result = subset_product(result, other)
    return result


def find_crisp_violation(kind: "str | IdealKind", subset: ElementSubset) -> Optional[int]:
    """
    First element forced into the subset by the kind's inclusion but missing from it.

    Returns None when the defining inclusion(s) hold.
    """
    kind = IdealKind.parse(kind)
    if subset.is_empty():
        raise EmptySubsetError(f"{kind.value} predicate requires a non-empty subset")
    whole = subset.structure.full

    if kind is IdealKind.LEFT:
        required = [subset_product(whole, subset)]
    elif kind is IdealKind.RIGHT:
        required = [subset_product(subset, whole)]
    elif kind is IdealKind.TWO_SIDED:
        required = [subset_product(whole, subset), subset_product(subset, whole)]
    elif kind is IdealKind.QUASI:
        required = [subset_product(whole, subset) & subset_product(subset, whole)]
    else:
        required = [subset_product(subset, subset)]
        if kind is IdealKind.BI:
            required.append(product_chain(subset, whole, subset))
        elif kind is IdealKind.ONE_TWO:
            required.append(product_chain(subset, whole, subset, subset))

    for forced in required:
        missing = forced.members - subset.members
        if missing:
            return min(missing)
    return None


def check_crisp(kind: "str | IdealKind", subset: ElementSubset) -> bool:
    return find_crisp_violation(kind, subset) is None


def generate_ideal_of_set(kind: "str | IdealKind", seeds: ElementSubset) -> ElementSubset:
    """Least left/right/two-sided ideal containing the seeds (fixed-point closure)."""
    kind = IdealKind.parse(kind)
    if kind not in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED):
        raise GammaAlgebraError(f"closure generation is defined for left, right and two_sided, not {kind.value}")
    whole = seeds.structure.full
    current = seeds
    while True:
        grown = current
        if kind in (IdealKind.LEFT, IdealKind.TWO_SIDED):
            grown = grown | subset_product(whole, current)
        if kind in (IdealKind.RIGHT, IdealKind.TWO_SIDED):
            grown = grown | subset_product(current, whole)
        if grown == current:
            return current
        current = grown


def generate_ideal(kind: "str | IdealKind", structure: GammaSemigroup, a: int) -> ElementSubset:
    """
    Ideal of the given kind generated by the element a.

    left/right/two_sided use closure; quasi uses {a} ∪ (aΓS ∩ SΓa).
    """
    kind = IdealKind.parse(kind)
    if kind not in GENERATED_KINDS:
        valid = ", ".join(k.value for k in GENERATED_KINDS)
        raise GammaAlgebraError(f"generated ideals exist for {valid}, not {kind.value}")
    single = ElementSubset(structure, frozenset([a]))
    if kind is IdealKind.QUASI:
        whole = structure.full
        quasi = single | (subset_product(single, whole) & subset_product(whole, single))
        if not check_crisp(IdealKind.QUASI, quasi):
            raise GammaAlgebraError(f"Q[{a}] failed the quasi ideal inclusion")
        return quasi
    return generate_ideal_of_set(kind, single)


def ideal_formula_variants(structure: GammaSemigroup, a: int) -> Dict[str, ElementSubset]:
    """The explicit generator formulas used in proofs, for comparison with closure."""
    single = ElementSubset(structure, frozenset([a]))
    whole = structure.full
    left_product = subset_product(whole, single)
    right_product = subset_product(single, whole)
    squares = subset_product(single, single)
    return {
        "left_product": left_product,
        "left_with_generator": single | left_product,
        "right_product": right_product,
        "right_with_generator": single | right_product,
        "left_of_squares": squares | product_chain(whole, single, single),
        "two_sided_with_generator": single | left_product | right_product | product_chain(whole, single, whole),
    }


def formula_contains_generator(structure: GammaSemigroup, a: int) -> Dict[str, bool]:
    """
    Whether a lies in each generator formula.

    The ``*_with_generator`` formulas always hold a; SΓa and aΓS hold it when
    a ∈ aΓSΓa, and {aγa} ∪ SΓaΓa exactly when a ∈ SΓaΓa.
    """
    return {name: a in variant for name, variant in ideal_formula_variants(structure, a).items()}


def enumerate_crisp(kind: "str | IdealKind", structure: GammaSemigroup, guard: int = SUBSET_GUARD) -> List[ElementSubset]:
    """All non-empty subsets passing check_crisp(kind), in ascending mask order."""
    kind = IdealKind.parse(kind)
    if structure.n > guard:
        raise GuardExceededError(f"subset enumeration needs n ≤ {guard}, got n={structure.n}")
    return [
        subset
        for subset in (ElementSubset.from_mask(structure, mask) for mask in range(1, 1 << structure.n))
        if check_crisp(kind, subset)
    ]


FLAG_NAMES = (
    "regular",
    "intra_regular",
    "left_regular",
    "right_regular",
    "left_simple",
    "right_simple",
    "simple",
    "left_zero",
    "right_zero",
    "left_duo",
    "right_duo",
    "duo",
    "idempotent",
    "idempotents_left_zero",
    "idempotents_right_zero",
    "strict_idempotents_left_zero",
    "strict_idempotents_right_zero",
    "weakly_left_zero",
    "weakly_right_zero",
)


@dataclass(frozen=True)
class StructureProfile:
    """Structural classification of a Γ-semigroup; every flag is computed from its own definition."""

    regular: bool
    intra_regular: bool
    left_regular: bool
    right_regular: bool
    left_simple: bool
    right_simple: bool
    simple: bool
    left_zero: bool
    right_zero: bool
    left_duo: bool
    right_duo: bool
    duo: bool
    idempotents: ElementSubset
    # every element is idempotent
    idempotent: bool = False
    # ∀e,f ∈ E ∃β: eβf = e (resp. = f)
    idempotents_left_zero: bool = False
    idempotents_right_zero: bool = False
    # ∀e,f ∈ E ∀β: eβf = e (resp. = f)
    strict_idempotents_left_zero: bool = False
    strict_idempotents_right_zero: bool = False
    # ∀x,y ∃β: xβy = x (resp. = y)
    weakly_left_zero: bool = False
    weakly_right_zero: bool = False

    def flags(self) -> Dict[str, bool]:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def to_dict(self) -> dict:
        document = dict(self.flags())
        document["idempotents"] = sorted(self.idempotents.members)
        return document


def _square_set(structure: GammaSemigroup, a: int) -> FrozenSet[int]:
    return frozenset(structure.mul(a, gamma, a) for gamma in structure.gammas)


def _left_multiples(structure: GammaSemigroup, b: int) -> FrozenSet[int]:
    """SΓb"""
    return frozenset(structure.mul(x, gamma, b) for x in structure.elements for gamma in structure.gammas)


def _right_multiples(structure: GammaSemigroup, b: int) -> FrozenSet[int]:
    """bΓS"""
    return frozenset(structure.mul(b, gamma, y) for y in structure.elements for gamma in structure.gammas)


def _pairs_satisfy(structure: GammaSemigroup, elements: List[int], want_left: bool, every_gamma: bool) -> bool:
    quantifier = all if every_gamma else any
    for e, f in product(elements, repeat=2):
        target = e if want_left else f
        if not quantifier(structure.mul(e, gamma, f) == target for gamma in structure.gammas):
            return False
    return True


def classify(structure: GammaSemigroup) -> StructureProfile:
    """Compute the StructureProfile by direct quantifier search."""
    s = structure
    elements = list(s.elements)
    left_mult = [_left_multiples(s, b) for b in elements]
    right_mult = [_right_multiples(s, b) for b in elements]
    bilateral = [frozenset().union(*(right_mult[p] for p in left_mult[b])) for b in elements]

    regular = all(a in s.sandwiches[a][a] for a in elements)
    intra_regular = all(any(a in bilateral[b] for b in _square_set(s, a)) for a in elements)
    left_regular = all(any(a in left_mult[b] for b in _square_set(s, a)) for a in elements)
    right_regular = all(any(a in right_mult[b] for b in _square_set(s, a)) for a in elements)

    table = s.table
    left_zero = bool((table == np.arange(s.n)[:, None, None]).all())
    right_zero = bool((table == np.arange(s.n)[None, None, :]).all())

    # every left (right, two-sided) ideal is a union of principal ones
    principal_left = [generate_ideal(IdealKind.LEFT, s, a) for a in elements]
    principal_right = [generate_ideal(IdealKind.RIGHT, s, a) for a in elements]
    principal_ideal = [generate_ideal(IdealKind.TWO_SIDED, s, a) for a in elements]
    left_simple = all(len(ideal) == s.n for ideal in principal_left)
    right_simple = all(len(ideal) == s.n for ideal in principal_right)
    simple = all(len(ideal) == s.n for ideal in principal_ideal)
    left_duo = all(check_crisp(IdealKind.RIGHT, ideal) for ideal in principal_left)
    right_duo = all(check_crisp(IdealKind.LEFT, ideal) for ideal in principal_right)

    idempotent_elements = [e for e in elements if e in _square_set(s, e)]

    return StructureProfile(
        regular=regular,
        intra_regular=intra_regular,
        left_regular=left_regular,
        right_regular=right_regular,
        left_simple=left_simple,
        right_simple=right_simple,
        simple=simple,
        left_zero=left_zero,
        right_zero=right_zero,
        left_duo=left_duo,
        right_duo=right_duo,
        duo=left_duo and right_duo,
        idempotents=ElementSubset(s, frozenset(idempotent_elements)),
        idempotent=len(idempotent_elements) == s.n,
        idempotents_left_zero=_pairs_satisfy(s, idempotent_elements, want_left=True, every_gamma=False),
        idempotents_right_zero=_pairs_satisfy(s, idempotent_elements, want_left=False, every_gamma=False),
        strict_idempotents_left_zero=_pairs_satisfy(s, idempotent_elements, want_left=True, every_gamma=True),
        strict_idempotents_right_zero=_pairs_satisfy(s, idempotent_elements, want_left=False, every_gamma=True),
        weakly_left_zero=_pairs_satisfy(s, elements, want_left=True, every_gamma=False),
        weakly_right_zero=_pairs_satisfy(s, elements, want_left=False, every_gamma=False),
    )
