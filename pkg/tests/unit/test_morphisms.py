"""
Tests for tools.morphisms: homomorphism validation and transport of fuzzy subsets.
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import fuzzy_subsets, small_structures
from tools.core_algebra import GammaSemigroup, IdealKind
from tools.errors import GammaAlgebraError, GuardExceededError, NotSurjectiveError, StructureMismatchError
from tools.fuzzy_engine import FuzzySubset, check_fuzzy
from tools.instance_factory import left_zero
from tools.morphisms import (
    Homomorphism,
    constant_hom,
    endo_transport,
    enumerate_endomorphisms,
    enumerate_quotients,
    identity_hom,
    pullback,
    pushforward,
    quotient_by,
    validate_hom,
)

HALF = Fraction(1, 2)
SMALL = [s for s in small_structures() if s.n <= 3]


class TestValidateHom:
    """Homomorphism validation"""

    def test_swap_on_left_zero(self, lz2):
        result = validate_hom(lz2, lz2, [1, 0])
        assert result.ok
        assert result.value.bijective
        assert result.value.to_text() == "1 0"

    def test_identity_from_left_zero_to_right_zero_fails(self, lz2, rz2):
        result = validate_hom(lz2, rz2, [0, 1])
        assert not result.ok
        assert list(result.violations) == [(0, 0, 1), (1, 0, 0)]

    def test_arity_and_range(self, lz2):
        with pytest.raises(GammaAlgebraError):
            validate_hom(lz2, lz2, [0])
        with pytest.raises(GammaAlgebraError):
            validate_hom(lz2, lz2, [0, 2])

    def test_gamma_sizes_must_match(self, lz2):
        with pytest.raises(StructureMismatchError):
            validate_hom(lz2, left_zero(2, 2), [0, 1])

    def test_identity_and_constant(self, lz2, z2group):
        assert identity_hom(lz2).mapping == (0, 1)
        assert constant_hom(lz2, 1).mapping == (1, 1)
        with pytest.raises(GammaAlgebraError):
            constant_hom(z2group, 0)

    def test_injectivity(self, lz2):
        f = constant_hom(lz2, 0)
        assert not f.injective
        assert not f.bijective
        assert identity_hom(lz2).bijective


class TestEndomorphisms:
    """Enumeration of self-maps"""

    def test_every_self_map_of_left_zero(self, lz2):
        maps = [f.mapping for f in enumerate_endomorphisms(lz2)]
        assert maps == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_guard(self, mod3):
        with pytest.raises(GuardExceededError):
            enumerate_endomorphisms(mod3, guard=2)

    def test_identity_always_present(self, mod3):
        assert identity_hom(mod3) in enumerate_endomorphisms(mod3)


class TestQuotients:
    """Congruences and projections onto quotients"""

    def test_congruences_of_mod3(self, mod3):
        projections = enumerate_quotients(mod3)
        assert [p.mapping for p in projections] == [(0, 1, 2), (0, 1, 1), (0, 0, 0)]
        assert projections[0] == identity_hom(mod3)
        # {0} and the units {1, 2}: 0 absorbs, units multiply to units
        assert projections[1].target == GammaSemigroup([[[0, 0], [0, 0]], [[0, 1], [0, 1]]])
        assert all(p.surjective and validate_hom(mod3, p.target, p.mapping).ok for p in projections)

    def test_partition_that_is_not_a_congruence(self, mod3):
        # 1·1·2 = 2 but 0·1·2 = 0
        assert quotient_by(mod3, (0, 0, 1)) is None

    def test_labels_must_cover_classes(self, mod3):
        with pytest.raises(GammaAlgebraError):
            quotient_by(mod3, (0, 2, 2))
        with pytest.raises(GammaAlgebraError):
            quotient_by(mod3, (0, 1))

    def test_guard(self, mod3):
        with pytest.raises(GuardExceededError):
            enumerate_quotients(mod3, guard=2)

    def test_pushforward_takes_max_over_merged_elements(self, mod3):
        f = quotient_by(mod3, (0, 1, 1))
        assert pushforward(f, FuzzySubset(mod3, (0, HALF, 1))).grades == (Fraction(0), Fraction(1))
        assert pushforward(f, FuzzySubset(mod3, (HALF, 1, HALF))).grades == (HALF, Fraction(1))

    def test_pushforward_onto_one_point(self, lz2):
        f = quotient_by(lz2, (0, 0))
        assert pushforward(f, FuzzySubset(lz2, (HALF, 0))).grades == (HALF,)


class TestTransport:
    """Pullback, pushforward and μ[θ]"""

    def test_swap_pushforward(self, lz2):
        swap = validate_hom(lz2, lz2, [1, 0]).value
        mu = FuzzySubset(lz2, (HALF, 1))
        assert pushforward(swap, mu).grades == (Fraction(1), HALF)

    def test_pullback_along_constant(self, lz2):
        f = constant_hom(lz2, 1)
        assert pullback(f, FuzzySubset(lz2, (0, HALF))).grades == (HALF, HALF)

    def test_pushforward_needs_surjection(self, lz2):
        with pytest.raises(NotSurjectiveError):
            pushforward(constant_hom(lz2, 0), FuzzySubset(lz2, (1, 1)))

    def test_wrong_structure(self, lz2, rz2):
        with pytest.raises(StructureMismatchError):
            pullback(identity_hom(lz2), FuzzySubset(rz2, (1, 1)))

    def test_endo_transport_needs_endomorphism(self, lz2):
        f = Homomorphism(lz2, left_zero(2, 1), (0, 1))
        assert f.is_endomorphism
        with pytest.raises(StructureMismatchError):
            endo_transport(f, FuzzySubset(left_zero(3, 1), (1, 1, 1)))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_pullback_preserves_fuzzy_ideals(self, data):
        structure = data.draw(st.sampled_from(SMALL))
        f = data.draw(st.sampled_from(enumerate_endomorphisms(structure)))
        lam = data.draw(fuzzy_subsets(structure))
        preimage = pullback(f, lam)
        if preimage.is_empty():
            return
        for kind in IdealKind:
            if check_fuzzy(kind, lam):
                assert check_fuzzy(kind, preimage)

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_surjective_pushforward_preserves_fuzzy_ideals(self, data):
        structure = data.draw(st.sampled_from(SMALL))
        bijections = [f for f in enumerate_endomorphisms(structure) if f.bijective]
        f = data.draw(st.sampled_from(bijections + enumerate_quotients(structure)))
        mu = data.draw(fuzzy_subsets(structure))
        for kind in IdealKind:
            if kind is not IdealKind.QUASI and check_fuzzy(kind, mu):
                assert check_fuzzy(kind, pushforward(f, mu))
