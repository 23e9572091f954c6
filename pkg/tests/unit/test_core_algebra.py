"""
Tests for tools.core_algebra: tables, validation, crisp ideals, classification.
"""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tests.strategies import structure_with_subsets, structures
from tools.core_algebra import (
    ElementSubset,
    GammaSemigroup,
    IdealKind,
    associative_mask,
    associativity_violations,
    check_crisp,
    classify,
    enumerate_crisp,
    find_crisp_violation,
    formula_contains_generator,
    generate_ideal,
    generate_ideal_of_set,
    ideal_formula_variants,
    subset_product,
    validate,
)
from tools.errors import EmptySubsetError, GammaAlgebraError, StructureMismatchError, StructureShapeError
from tools.instance_factory import left_zero

# x·y = 1 - x: (x·y)·z = x but x·(y·z) = 1 - x everywhere
NEGATION = [[[1, 1]], [[0, 0]]]


class TestGammaSemigroup:
    """Table shape, lookups and derived indexes"""

    def test_shape_and_lookup(self, mod3):
        assert (mod3.n, mod3.m) == (3, 2)
        assert mod3.mul(2, 1, 2) == (2 * 2 * 2) % 3

    def test_table_is_read_only(self, lz2):
        with pytest.raises(ValueError):
            lz2.table[0, 0, 0] = 1

    def test_equality_and_hash_follow_the_table(self, lz2):
        again = GammaSemigroup([[[0, 0]], [[1, 1]]])
        assert again == lz2
        assert hash(again) == hash(lz2)
        assert again != left_zero(2, 2)

    def test_non_square_table_rejected(self):
        with pytest.raises(StructureShapeError):
            GammaSemigroup(np.zeros((2, 1, 3), dtype=int))

    def test_ragged_table_rejected(self):
        with pytest.raises(StructureShapeError):
            GammaSemigroup([[[0, 1]], [[0]]])

    def test_out_of_range_entries_report_every_coordinate(self):
        with pytest.raises(StructureShapeError) as info:
            GammaSemigroup([[[0, 2]], [[5, 1]]])
        assert info.value.coordinates == [(0, 0, 1), (1, 0, 0)]

    def test_factorizations_of_left_zero(self, lz2):
        # x = yγz iff y = x
        assert lz2.factorizations == (((0, 0), (0, 1)), ((1, 0), (1, 1)))

    def test_sandwiches(self, mod3):
        assert mod3.sandwiches[0][1] == frozenset({0})
        assert mod3.sandwiches[1][1] == frozenset({0, 1, 2})

    def test_serialize_is_gamma_major(self):
        table = left_zero(2, 2)
        assert table.serialize() == (0, 0, 1, 1, 0, 0, 1, 1)
        assert table.to_blocks() == [[[0, 0], [1, 1]], [[0, 0], [1, 1]]]


class TestValidate:
    """Associativity validation"""

    def test_left_zero_is_associative(self, lz2):
        result = validate(lz2.table)
        assert result.ok
        assert result.value == lz2

    def test_negation_lists_every_violation(self):
        result = validate(NEGATION)
        assert not result.ok
        assert result.value is None
        assert len(result.violations) == 8
        assert result.violations[0].to_line() == "0 0 0 0 0 0 1"

    def test_shape_errors_raise(self):
        with pytest.raises(StructureShapeError):
            validate([[[0, 3]], [[0, 0]]])

    @settings(max_examples=60)
    @given(st.lists(st.integers(0, 1), min_size=8, max_size=8))
    def test_batch_mask_agrees_with_violation_listing(self, entries):
        table = np.array(entries).reshape(2, 2, 2)
        mask = associative_mask(table[None, ...])
        assert bool(mask[0]) == (not associativity_violations(table))


class TestElementSubset:
    """Subset algebra"""

    def test_mask_round_trip(self, mod3):
        subset = ElementSubset.from_indices(mod3, [0, 2])
        assert subset.mask == 0b101
        assert ElementSubset.from_mask(mod3, 0b101) == subset
        assert subset.to_text() == "0,2"
        assert str(subset) == "{0,2}"

    def test_set_operations(self, mod3):
        a = ElementSubset.from_indices(mod3, [0, 1])
        b = ElementSubset.from_indices(mod3, [1, 2])
        assert list(a | b) == [0, 1, 2]
        assert list(a & b) == [1]
        assert list(a.complement()) == [2]
        assert (a & b) <= a

    def test_out_of_range_member(self, lz2):
        with pytest.raises(GammaAlgebraError):
            ElementSubset.from_indices(lz2, [2])

    def test_mixing_structures_raises(self, lz2, rz2):
        with pytest.raises(StructureMismatchError):
            ElementSubset.from_indices(lz2, [0]) | ElementSubset.from_indices(rz2, [0])

    def test_subset_product(self, mod3):
        one = ElementSubset.from_indices(mod3, [1])
        assert list(subset_product(one, one)) == [1, 2]
        assert subset_product(one, ElementSubset(mod3, frozenset())).is_empty()


class TestCrispIdeals:
    """Crisp ideal predicates and generated ideals"""

    def test_left_zero_ideals(self, lz2):
        assert [s.mask for s in enumerate_crisp(IdealKind.LEFT, lz2)] == [0b11]
        assert [s.mask for s in enumerate_crisp(IdealKind.RIGHT, lz2)] == [0b01, 0b10, 0b11]

    def test_first_missing_element(self, lz2):
        zero = ElementSubset.from_indices(lz2, [0])
        assert find_crisp_violation(IdealKind.LEFT, zero) == 1
        assert find_crisp_violation(IdealKind.RIGHT, zero) is None

    def test_quasi_zero_of_mod3(self, mod3):
        assert check_crisp("quasi", ElementSubset.from_indices(mod3, [0]))

    def test_empty_subset_raises(self, lz2):
        with pytest.raises(EmptySubsetError):
            check_crisp(IdealKind.BI, ElementSubset(lz2, frozenset()))

    def test_unknown_kind(self, lz2):
        with pytest.raises(GammaAlgebraError, match="Valid kinds"):
            check_crisp("prime", lz2.full)

    def test_kind_parsing_is_lenient(self):
        assert IdealKind.parse("Two-Sided") is IdealKind.TWO_SIDED

    def test_generated_ideals_of_mod3(self, mod3):
        assert list(generate_ideal(IdealKind.LEFT, mod3, 0)) == [0]
        assert list(generate_ideal(IdealKind.LEFT, mod3, 1)) == [0, 1, 2]
        assert list(generate_ideal(IdealKind.QUASI, mod3, 0)) == [0]

    def test_closure_only_for_one_sided_kinds(self, mod3):
        with pytest.raises(GammaAlgebraError):
            generate_ideal_of_set(IdealKind.BI, mod3.full)

    def test_formula_variants(self, lz2):
        variants = ideal_formula_variants(lz2, 0)
        assert list(variants["left_product"]) == [0, 1]
        assert list(variants["right_product"]) == [0]
        assert list(variants["left_with_generator"]) == [0, 1]

    def test_generator_membership_in_formulas(self, mod3):
        assert formula_contains_generator(mod3, 1) == {
            "left_product": True,
            "left_with_generator": True,
            "right_product": True,
            "right_with_generator": True,
            "left_of_squares": True,
            "two_sided_with_generator": True,
        }

    def test_generated_ideal_kinds(self, mod3):
        with pytest.raises(GammaAlgebraError, match="generated ideals exist for"):
            generate_ideal(IdealKind.BI, mod3, 0)

    @settings(max_examples=80, deadline=None)
    @given(structures())
    def test_generator_membership_tracks_regularity(self, structure):
        profile = classify(structure)
        memberships = [formula_contains_generator(structure, a) for a in structure.elements]
        assert all(m["left_with_generator"] and m["right_with_generator"] and m["two_sided_with_generator"] for m in memberships)
        assert profile.left_regular == all(m["left_of_squares"] for m in memberships)
        if profile.regular:
            assert all(m["left_product"] and m["right_product"] for m in memberships)

    @settings(max_examples=80, deadline=None)
    @given(structure_with_subsets())
    def test_generated_ideal_is_least(self, drawn):
        structure, seeds = drawn
        for kind in (IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED):
            closure = generate_ideal_of_set(kind, seeds)
            assert seeds <= closure
            assert check_crisp(kind, closure)
            for ideal in enumerate_crisp(kind, structure):
                if seeds <= ideal:
                    assert closure <= ideal

    @settings(max_examples=80, deadline=None)
    @given(structures())
    def test_generator_formulas_lie_inside_the_closure(self, structure):
        for a in structure.elements:
            variants = ideal_formula_variants(structure, a)
            assert variants["left_product"] <= generate_ideal(IdealKind.LEFT, structure, a)
            assert variants["right_product"] <= generate_ideal(IdealKind.RIGHT, structure, a)
            assert variants["two_sided_with_generator"] <= generate_ideal(IdealKind.TWO_SIDED, structure, a)

    @settings(max_examples=80, deadline=None)
    @given(structure_with_subsets())
    def test_kind_implications(self, drawn):
        _, subset = drawn
        if check_crisp(IdealKind.LEFT, subset) or check_crisp(IdealKind.RIGHT, subset):
            assert check_crisp(IdealKind.QUASI, subset)
        if check_crisp(IdealKind.QUASI, subset):
            assert check_crisp(IdealKind.BI, subset)
        if check_crisp(IdealKind.BI, subset):
            assert check_crisp(IdealKind.SUBSEMIGROUP, subset)


class TestClassify:
    """Structural profile"""

    def test_mod3(self, mod3):
        profile = classify(mod3)
        assert profile.regular
        assert list(profile.idempotents) == [0, 1, 2]
        assert profile.duo
        assert not profile.simple
        assert not profile.left_zero

    def test_left_zero(self, lz2):
        profile = classify(lz2)
        assert profile.left_zero and not profile.right_zero
        assert profile.left_simple and not profile.right_simple
        assert profile.regular and profile.idempotent
        assert profile.weakly_left_zero

    def test_right_zero_mirrors_left_zero(self, rz2):
        profile = classify(rz2)
        assert profile.right_zero and not profile.left_zero
        assert profile.right_simple and not profile.left_simple

    def test_weak_and_strict_idempotent_readings_differ(self, z2group):
        profile = classify(z2group)
        assert profile.idempotent
        assert profile.idempotents_left_zero
        assert not profile.strict_idempotents_left_zero
        assert profile.left_simple and profile.right_simple

    def test_to_dict(self, lz2):
        document = classify(lz2).to_dict()
        assert document["left_zero"] is True
        assert document["idempotents"] == [0, 1]
        assert set(document) >= {"regular", "duo", "simple"}
