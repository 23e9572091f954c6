"""
Instance factory: named Γ-semigroup constructions, exhaustive enumeration and
seeded sampling of Cayley tables, and canonical forms up to relabeling of both
S and Γ.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from tools.core_algebra import GammaSemigroup, associative_mask, validate
from tools.errors import GammaAlgebraError, GuardExceededError

logger = logging.getLogger(__name__)

EXHAUSTIVE_BUDGET = 2_000_000
CHUNK_SIZE = 8192
CANONICAL_GUARD_N = 6
CANONICAL_GUARD_M = 3

CONSTRUCTORS = ("left_zero", "right_zero", "modular", "lift", "explicit")


@dataclass(frozen=True)
class InstanceSpec:
    """
    Recipe for one Γ-semigroup.

    left_zero / right_zero use n and m; modular uses n and gammas (xγy = x·γ·y mod n);
    lift replicates the semigroup product ``table`` (n×n) across m parameters;
    explicit takes an n×m×n ``table``.
    """

    constructor: str
    n: int = 0
    m: int = 1
    gammas: Tuple[int, ...] = ()
    table: Optional[tuple] = field(default=None, compare=False)
    seed: Optional[int] = None


def make(spec: InstanceSpec) -> GammaSemigroup:
    if spec.constructor not in CONSTRUCTORS:
        raise GammaAlgebraError(f"unknown constructor '{spec.constructor}'. Valid: {', '.join(CONSTRUCTORS)}")

    if spec.constructor in ("left_zero", "right_zero"):
        if spec.n < 1 or spec.m < 1:
            raise GammaAlgebraError(f"{spec.constructor} needs n ≥ 1 and m ≥ 1, got n={spec.n}, m={spec.m}")
        x = np.arange(spec.n)
        if spec.constructor == "left_zero":
            table = np.broadcast_to(x[:, None, None], (spec.n, spec.m, spec.n))
        else:
            table = np.broadcast_to(x[None, None, :], (spec.n, spec.m, spec.n))
    elif spec.constructor == "modular":
        if spec.n < 2 or not spec.gammas:
            raise GammaAlgebraError("modular needs n ≥ 2 and at least one γ value")
        bad = [g for g in spec.gammas if not 1 <= g <= spec.n - 1]
        if bad:
            raise GammaAlgebraError(f"modular γ values must lie in 1..{spec.n - 1}, got {bad}")
        x = np.arange(spec.n)
        gammas = np.asarray(spec.gammas)
        table = (x[:, None, None] * gammas[None, :, None] * x[None, None, :]) % spec.n
    elif spec.constructor == "lift":
        if spec.table is None or spec.m < 1:
            raise GammaAlgebraError("lift needs a semigroup table and m ≥ 1")
        semigroup = np.asarray(spec.table, dtype=np.int64)
        if semigroup.ndim != 2 or semigroup.shape[0] != semigroup.shape[1]:
            raise GammaAlgebraError(f"lift needs a square semigroup table, got shape {semigroup.shape}")
        table = np.repeat(semigroup[:, None, :], spec.m, axis=1)
    else:
        if spec.table is None:
            raise GammaAlgebraError("explicit needs a table")
        table = spec.table

    result = validate(table)
    if not result.ok:
        first = result.violations[0]
        raise GammaAlgebraError(
            f"{spec.constructor} produced a non-associative table ({len(result.violations)} violations, first {first.to_line()})"
        )
    return result.value


def left_zero(n: int, m: int = 1) -> GammaSemigroup:
    return make(InstanceSpec("left_zero", n=n, m=m))


def right_zero(n: int, m: int = 1) -> GammaSemigroup:
    return make(InstanceSpec("right_zero", n=n, m=m))


def modular(n: int, gammas: Sequence[int]) -> GammaSemigroup:
    return make(InstanceSpec("modular", n=n, m=len(gammas), gammas=tuple(gammas)))


def lift(semigroup_table: Sequence[Sequence[int]], m: int = 1) -> GammaSemigroup:
    return make(InstanceSpec("lift", m=m, table=tuple(tuple(row) for row in semigroup_table)))


def _z2_group() -> GammaSemigroup:
    x = np.arange(2)
    return make(InstanceSpec("explicit", table=(x[:, None, None] + x[None, :, None] + x[None, None, :]) % 2))


NAMED_INSTANCES = {
    "LZ2": lambda: left_zero(2, 1),
    "RZ2": lambda: right_zero(2, 1),
    "MOD3": lambda: modular(3, [1, 2]),
    # Z₂ with Γ = Z₂, xγy = x+γ+y mod 2
    "Z2GROUP": _z2_group,
    # 2-element right-zero semigroup lifted to |Γ| = 2
    "LIFT_RZ2": lambda: lift([[0, 1], [0, 1]], m=2),
}


def named(name: str) -> GammaSemigroup:
    key = name.strip().upper()
    if key not in NAMED_INSTANCES:
        raise GammaAlgebraError(f"unknown named instance '{name}'. Available: {', '.join(NAMED_INSTANCES)}")
    return NAMED_INSTANCES[key]()


def candidate_count(n: int, m: int) -> int:
    return n ** (n * n * m)


def _decode(indices: np.ndarray, n: int, m: int) -> np.ndarray:
    """Candidate indices → tables (K, n, m, n); digits base n, most significant first, γ-major."""
    cells = n * n * m
    powers = n ** np.arange(cells - 1, -1, -1, dtype=np.int64)
    digits = (indices[:, None] // powers[None, :]) % n
    return digits.reshape(-1, m, n, n).transpose(0, 2, 1, 3)


def _rng(seed: int, n: int, m: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(n, m)))


def enumerate_all(n: int, m: int, budget: int = EXHAUSTIVE_BUDGET, seed: int = 0) -> Iterator[GammaSemigroup]:
    """
    Every associative n×m×n table in lexicographic (γ-major) order when the
    candidate space fits the budget; otherwise ``budget`` seeded uniform
    candidates filtered for associativity, without repeats.
    """
    if n < 1 or m < 1:
        raise GammaAlgebraError(f"enumeration needs n ≥ 1 and m ≥ 1, got n={n}, m={m}")
    total = candidate_count(n, m)
    emitted = 0

    if total <= budget:
        for start in range(0, total, CHUNK_SIZE):
            indices = np.arange(start, min(start + CHUNK_SIZE, total), dtype=np.int64)
            tables = _decode(indices, n, m)
            for table in tables[associative_mask(tables)]:
                emitted += 1
                yield GammaSemigroup(table)
        logger.info(f"[instance_factory] ✅ n={n} m={m}: {emitted} associative tables out of {total} candidates")
        return

    logger.warning(f"[instance_factory] ⚠️ n={n} m={m}: {total} candidates exceed budget {budget}, sampling")
    rng = _rng(seed, n, m)
    seen = set()
    drawn = 0
    while drawn < budget:
        size = min(CHUNK_SIZE, budget - drawn)
        tables = rng.integers(0, n, size=(size, n, m, n), dtype=np.int64)
        drawn += size
        for table in tables[associative_mask(tables)]:
            key = table.tobytes()
            if key not in seen:
                seen.add(key)
                emitted += 1
                yield GammaSemigroup(table)
    logger.info(f"[instance_factory] 🔍 n={n} m={m}: sampling yield {emitted}/{drawn} ({emitted / drawn:.4%})")


def seeded_sample(n: int, m: int, count: int, seed: int = 0, budget: int = EXHAUSTIVE_BUDGET) -> List[GammaSemigroup]:
    """``count`` distinct valid structures chosen reproducibly from the seed."""
    if candidate_count(n, m) <= budget:
        population = list(enumerate_all(n, m, budget))
        if count > len(population):
            raise GuardExceededError(f"only {len(population)} structures exist for n={n}, m={m}; asked for {count}")
        picks = _rng(seed, n, m).choice(len(population), size=count, replace=False)
        return [population[int(i)] for i in sorted(picks)]

    sample = []
    for structure in enumerate_all(n, m, budget, seed=seed):
        sample.append(structure)
        if len(sample) == count:
            return sample
    raise GuardExceededError(f"sampling found {len(sample)} of {count} structures for n={n}, m={m} within budget {budget}")


def canonicalize(structure: GammaSemigroup, guard_n: int = CANONICAL_GUARD_N, guard_m: int = CANONICAL_GUARD_M) -> GammaSemigroup:
    """Lexicographically minimal (γ-major) table over all relabelings of S and Γ."""
    n, m = structure.n, structure.m
    if n > guard_n or m > guard_m:
        raise GuardExceededError(f"canonical form needs n ≤ {guard_n} and m ≤ {guard_m}, got n={n}, m={m}")
    table = structure.table
    best: Optional[Tuple[int, ...]] = None
    best_table = table
    for gamma_order in permutations(range(m)):
        for element_order in permutations(range(n)):
            # relabel x ↦ perm[x]: new[perm[x], σ(γ), perm[y]] = perm[old[x, γ, y]]
            perm = np.asarray(element_order)
            inverse = np.argsort(perm)
            gamma_inverse = np.argsort(np.asarray(gamma_order))
            relabeled = perm[table[np.ix_(inverse, gamma_inverse, inverse)]]
            key = tuple(relabeled.transpose(1, 0, 2).ravel().tolist())
            if best is None or key < best:
                best, best_table = key, relabeled
    return GammaSemigroup(best_table)


def is_isomorphic(first: GammaSemigroup, second: GammaSemigroup) -> bool:
    if (first.n, first.m) != (second.n, second.m):
        return False
    return canonicalize(first) == canonicalize(second)


class CorpusInstance(NamedTuple):
    id: str
    structure: GammaSemigroup


def enumerate_corpus(
    max_n: int,
    max_m: int,
    extra: Iterable[Tuple[int, int]] = ((3, 1),),
    unique: bool = False,
    budget: int = EXHAUSTIVE_BUDGET,
    seed: int = 0,
) -> List[CorpusInstance]:
    """All structures with n ≤ max_n, m ≤ max_m plus the extra (n, m) shapes, with stable ids."""
    shapes: Dict[Tuple[int, int], None] = {}
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            shapes[(n, m)] = None
    for shape in extra:
        shapes[tuple(shape)] = None

    corpus: List[CorpusInstance] = []
    canonical_seen = set()
    for n, m in sorted(shapes):
        index = 0
        for structure in enumerate_all(n, m, budget, seed=seed):
            if unique and n <= CANONICAL_GUARD_N and m <= CANONICAL_GUARD_M:
                canonical = canonicalize(structure)
                if canonical in canonical_seen:
                    continue
                canonical_seen.add(canonical)
            corpus.append(CorpusInstance(f"n{n}m{m}-{index:05d}", structure))
            index += 1
    logger.info(f"[instance_factory] ✅ corpus of {len(corpus)} instances over shapes {sorted(shapes)}")
    return corpus


def named_corpus(names: Iterable[str] = tuple(NAMED_INSTANCES)) -> List[CorpusInstance]:
    return [CorpusInstance(name.upper(), named(name)) for name in names]
