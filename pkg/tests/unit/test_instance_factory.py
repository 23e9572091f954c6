"""
Tests for tools.instance_factory: constructors, enumeration, sampling, canonical forms.
"""
import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import structures
from tools.core_algebra import GammaSemigroup, validate
from tools.errors import GammaAlgebraError, GuardExceededError
from tools.instance_factory import (
    InstanceSpec,
    canonicalize,
    candidate_count,
    enumerate_all,
    enumerate_corpus,
    is_isomorphic,
    left_zero,
    lift,
    make,
    modular,
    named,
    named_corpus,
    seeded_sample,
)


def _relabel(structure: GammaSemigroup, perm) -> GammaSemigroup:
    perm = np.asarray(perm)
    inverse = np.argsort(perm)
    return GammaSemigroup(perm[structure.table[np.ix_(inverse, list(structure.gammas), inverse)]])


class TestConstructors:
    """Named and parametric instances"""

    def test_left_zero_table(self):
        assert left_zero(2, 2).table[1, 1, 0] == 1

    def test_modular(self, mod3):
        assert modular(3, [1, 2]) == mod3
        with pytest.raises(GammaAlgebraError):
            modular(3, [3])

    def test_lift(self):
        lifted = lift([[0, 1], [0, 1]], m=2)
        assert (lifted.n, lifted.m) == (2, 2)
        assert lifted.mul(0, 1, 1) == 1

    def test_explicit_rejects_non_associative(self):
        with pytest.raises(GammaAlgebraError, match="non-associative"):
            make(InstanceSpec("explicit", table=[[[1, 1]], [[0, 0]]]))

    def test_unknown_constructor(self):
        with pytest.raises(GammaAlgebraError):
            make(InstanceSpec("free"))

    def test_named_is_case_insensitive(self, lz2):
        assert named("lz2") == lz2
        with pytest.raises(GammaAlgebraError, match="Available"):
            named("nope")

    def test_named_corpus(self):
        ids = [item.id for item in named_corpus()]
        assert ids == ["LZ2", "RZ2", "MOD3", "Z2GROUP", "LIFT_RZ2"]


class TestEnumeration:
    """Exhaustive enumeration and sampling"""

    def test_two_element_semigroups(self):
        found = list(enumerate_all(2, 1))
        assert len(found) == 8
        assert found[0].serialize() == (0, 0, 0, 0)
        keys = [s.serialize() for s in found]
        assert keys == sorted(keys)

    def test_three_element_semigroups(self):
        assert len(list(enumerate_all(3, 1))) == 113

    def test_every_result_is_associative(self):
        assert all(validate(s.table).ok for s in enumerate_all(2, 2))

    def test_candidate_count(self):
        assert candidate_count(2, 2) == 2 ** 8

    def test_sampling_past_the_budget(self):
        first = [s.serialize() for s in enumerate_all(3, 1, budget=500, seed=3)]
        again = [s.serialize() for s in enumerate_all(3, 1, budget=500, seed=3)]
        assert first == again
        assert len(first) == len(set(first))
        assert all(validate(GammaSemigroup(np.array(key).reshape(1, 3, 3).transpose(1, 0, 2))).ok for key in first)

    def test_seeded_sample(self):
        picked = seeded_sample(2, 1, 3, seed=7)
        assert picked == seeded_sample(2, 1, 3, seed=7)
        assert len(set(picked)) == 3
        with pytest.raises(GuardExceededError):
            seeded_sample(2, 1, 9)

    def test_rejects_empty_shapes(self):
        with pytest.raises(GammaAlgebraError):
            list(enumerate_all(0, 1))


class TestCanonicalForms:
    """Canonical forms up to relabeling"""

    def test_left_and_right_zero_are_not_isomorphic(self, lz2, rz2):
        assert not is_isomorphic(lz2, rz2)

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            canonicalize(left_zero(7, 1))

    @settings(max_examples=60, deadline=None)
    @given(structures(), st.randoms(use_true_random=False))
    def test_relabeling_keeps_the_canonical_form(self, structure, rng):
        perm = list(range(structure.n))
        rng.shuffle(perm)
        relabeled = _relabel(structure, perm)
        assert validate(relabeled.table).ok
        assert canonicalize(relabeled) == canonicalize(structure)
        assert canonicalize(canonicalize(structure)) == canonicalize(structure)


class TestCorpus:
    """Acceptance corpus"""

    def test_ids_and_shapes(self):
        corpus = enumerate_corpus(2, 1, extra=())
        assert len(corpus) == 1 + 8
        assert corpus[0].id == "n1m1-00000"
        assert corpus[-1].id == "n2m1-00007"

    def test_unique_keeps_one_per_isomorphism_class(self):
        corpus = enumerate_corpus(2, 1, extra=(), unique=True)
        assert len(corpus) == 1 + 5

    def test_two_element_count_matches_naive_filter(self):
        # every map {0,1}^2 -> {0,1}, associativity checked triple by triple
        count = 0
        for entries in itertools.product(range(2), repeat=4):
            op = lambda x, y: entries[2 * x + y]
            if all(op(op(x, y), z) == op(x, op(y, z)) for x in range(2) for y in range(2) for z in range(2)):
                count += 1
        assert count == len(list(enumerate_all(2, 1))) == 8
