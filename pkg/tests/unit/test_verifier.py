"""
Tests for the verifier package: catalog, grid families, context, checks and orchestration.
"""
from dataclasses import replace
from fractions import Fraction

import pytest

from tools.core_algebra import GammaSemigroup, IdealKind, classify
from tools.errors import GammaAlgebraError
from tools.fuzzy_engine import GradeGrid
from tools.instance_factory import enumerate_corpus, named, named_corpus, seeded_sample
from util.settings import VerifierSettings
from verifier.catalog import CATALOG_ORDER, get_catalog, get_theorem, parse_theorem_ids, register
from verifier.context import VerificationContext
from verifier.families import build_family, enumerate_fuzzy_family, family_total
from verifier.models import CheckStatus, TheoremReport
from verifier.orchestrator import run_check, verify_corpus, verify_instance

GRID = GradeGrid.uniform(3)
# xy = 0 for all x, y: 1 has no factorization, so S is not regular
NULL2 = GammaSemigroup([[[0, 0]], [[0, 0]]])


class TestCatalog:
    """Statements joined with registered checks"""

    def test_every_id_has_statement_and_check(self):
        catalog = get_catalog()
        assert [entry.id for entry in catalog] == list(CATALOG_ORDER)
        assert len(catalog) == 39
        assert {entry.form for entry in catalog} <= {"a", "b", "c", "d"}

    def test_lookup_is_case_insensitive(self):
        assert get_theorem("t5.17").id == "T5.17"
        assert "T5.17" in get_theorem("T5.17").statement()

    def test_unknown_id(self):
        with pytest.raises(GammaAlgebraError, match="Unknown theorem"):
            get_theorem("T9.9")

    def test_parse_ids_in_catalog_order(self):
        assert parse_theorem_ids("T5.17, t3.4") == ["T3.4", "T5.17"]
        assert parse_theorem_ids(None) == list(CATALOG_ORDER)

    def test_register_rejects_duplicates_and_unknown_ids(self):
        get_catalog()
        with pytest.raises(ValueError):
            register("T3.4")(lambda ctx: None)
        with pytest.raises(ValueError):
            register("X1.1")


class TestFamilies:
    """Grid families of fuzzy subsets"""

    def test_exhaustive_family(self, lz2):
        family = build_family(lz2, GRID)
        assert len(family) == 8 == family_total(lz2, GRID)
        assert not family.truncated
        assert family.members[0].grades == (Fraction(0), Fraction(1, 2))

    def test_filtered_by_kind(self, lz2):
        # fuzzy left ideals of a left-zero structure are the constants
        members = list(enumerate_fuzzy_family(lz2, GRID, kind=IdealKind.LEFT))
        assert [mu.grades for mu in members] == [(Fraction(1, 2),) * 2, (Fraction(1),) * 2]

    def test_truncated_family_starts_with_characteristic_functions(self, mod3):
        family = build_family(mod3, GRID, budget=10, seed=4)
        assert family.truncated
        assert len(family) == 10
        assert [mu.grades for mu in family.members[:7]] == [
            tuple(Fraction(1) if mask >> x & 1 else Fraction(0) for x in range(3)) for mask in range(1, 8)
        ]
        assert len({mu.grades for mu in family.members}) == 10
        assert "truncated" in family.describe()

    def test_truncation_is_reproducible(self, mod3):
        first = build_family(mod3, GRID, budget=12, seed=9)
        assert first == build_family(mod3, GRID, budget=12, seed=9)


class TestVerificationContext:
    """Per-instance memoization"""

    def test_members_and_crisp_ideals(self, lz2):
        ctx = VerificationContext(lz2, GRID)
        assert len(ctx.members()) == 8
        assert len(ctx.members(IdealKind.LEFT)) == 2
        assert [s.mask for s in ctx.crisp_ideals(IdealKind.RIGHT)] == [1, 2, 3]
        assert ctx.profile == classify(lz2)

    def test_endomorphism_guard(self, mod3):
        ctx = VerificationContext(mod3, GRID, settings=VerifierSettings(morphism_check_guard=2))
        with pytest.raises(GammaAlgebraError):
            ctx.endomorphisms

    def test_bijective_endomorphisms(self, lz2):
        ctx = VerificationContext(lz2, GRID)
        assert [f.mapping for f in ctx.bijective_endomorphisms] == [(0, 1), (1, 0)]

    def test_surjective_homomorphisms_include_quotients(self, lz2, mod3):
        assert [f.mapping for f in VerificationContext(lz2, GRID).surjective_homomorphisms] == [(0, 1), (1, 0), (0, 0)]
        maps = VerificationContext(mod3, GRID).surjective_homomorphisms
        assert [(f.mapping, f.target.n) for f in maps] == [((0, 1, 2), 3), ((0, 1, 1), 2), ((0, 0, 0), 1)]


class TestRunCheck:
    """Single theorem on a single instance"""

    def test_pointwise_quasi_on_mod3(self, mod3):
        report = run_check("T5.17", mod3, GRID, instance_id="MOD3")
        assert report.status is CheckStatus.VERIFIED
        assert report.family_size == 26
        assert report.checked == 26
        assert report.grid == "{0, 1/2, 1}"

    def test_hypothesis_not_met(self, mod3):
        report = run_check("P4.13", mod3, GRID)
        assert report.status is CheckStatus.HYPOTHESIS_NOT_MET
        assert report.notes

    def test_guard_becomes_skipped(self, mod3):
        report = run_check("L5.12", mod3, GRID, settings=VerifierSettings(lemma_subset_guard=2))
        assert report.status is CheckStatus.SKIPPED
        assert "n ≤ 2" in report.notes[0]

    def test_transport_skipped_past_the_morphism_guard(self):
        report = run_check("P3.9", named("MOD3"), GRID, settings=VerifierSettings(morphism_check_guard=2))
        assert report.status is CheckStatus.SKIPPED

    def test_images_along_every_surjection(self, mod3):
        ctx = VerificationContext(mod3, GRID)
        report = run_check("P5.11", mod3, GRID)
        assert report.status is CheckStatus.VERIFIED
        assert report.checked == 3 * len(ctx.members(IdealKind.QUASI))
        report = run_check("P5.10", mod3, GRID)
        assert report.status is CheckStatus.VERIFIED
        assert report.checked == 3 * (len(ctx.members(IdealKind.LEFT)) + len(ctx.members(IdealKind.RIGHT)))
        assert run_check("P3.9", mod3, GRID).status is CheckStatus.VERIFIED

    def test_regularity_characterization_on_non_regular_instance(self):
        assert not classify(NULL2).regular
        assert run_check("T5.13", NULL2, GRID).status is CheckStatus.VERIFIED

    def test_strict_reading_is_reported_in_notes(self, z2group):
        report = run_check("T4.14", z2group, GRID)
        assert report.status is CheckStatus.VERIFIED
        assert any("strict" in note for note in report.notes)

    def test_global_beta_reading_is_reported_in_notes(self, mod3):
        report = run_check("T4.17", mod3, GRID)
        assert any("global β" in note for note in report.notes)


class TestVerifyCorpus:
    """Corpus runs, ordering, caching and parallelism"""

    def test_named_instances_have_no_counterexamples(self):
        report = verify_corpus(named_corpus(), GRID)
        assert report.ok, report.render_text()
        assert len(report.results) == 39 * 5

    def test_small_corpus_has_no_counterexamples(self):
        report = verify_corpus(enumerate_corpus(2, 2, extra=((3, 1),)), GRID)
        assert report.ok, report.render_text()

    def test_complete_grid(self):
        report = verify_corpus(enumerate_corpus(2, 1, extra=()), theorem_ids=["T5.13", "T5.15"], complete=True)
        assert report.ok
        assert {r.grid for r in report.results if r.instance.startswith("n2")} == {"{0, 1/2, 1}"}
        assert {r.grid for r in report.results if r.instance.startswith("n1")} == {"{0, 1}"}

    def test_results_are_sorted_by_catalog_then_instance(self):
        corpus = [("b", named("RZ2")), ("a", named("LZ2"))]
        report = verify_corpus(corpus, GRID, theorem_ids=["T5.18", "T3.4"])
        keys = [(r.theorem, r.instance) for r in report.results]
        assert keys == [("T3.4", "a"), ("T3.4", "b"), ("T5.18", "a"), ("T5.18", "b")]
        assert [entry["id"] for entry in report.corpus] == ["a", "b"]

    def test_deterministic(self):
        corpus = enumerate_corpus(2, 1, extra=())
        first = verify_corpus(corpus, GRID, theorem_ids=["T3.6", "P3.9"]).to_dict()
        assert first == verify_corpus(corpus, GRID, theorem_ids=["T3.6", "P3.9"]).to_dict()

    def test_bare_structures_get_ids(self, lz2):
        report = verify_corpus([lz2], GRID, theorem_ids=["T3.4"])
        assert report.results[0].instance == "instance-00000"

    def test_empty_corpus(self):
        report = verify_corpus([], GRID)
        assert report.ok
        assert report.results == []

    def test_cache_replays_reports(self, tmp_path, mod3):
        settings = VerifierSettings(cache_dir=str(tmp_path))
        first = verify_instance("MOD3", mod3, GRID, ["T5.17", "T3.4"], settings)
        assert len(list(tmp_path.glob("*.json"))) == 2
        again = verify_instance("other", mod3, GRID, ["T5.17", "T3.4"], settings)
        assert [r.to_dict() for r in again] == [replace(r, instance="other").to_dict() for r in first]

    def test_workers_match_sequential_run(self):
        corpus = enumerate_corpus(2, 1, extra=())
        ids = ["T3.12", "T5.17"]
        sequential = verify_corpus(corpus, GRID, theorem_ids=ids)
        parallel = verify_corpus(corpus, GRID, theorem_ids=ids, settings=VerifierSettings(workers=2))
        assert parallel.to_dict() == sequential.to_dict()


class TestTheoremReport:
    """Report documents"""

    def test_round_trip(self):
        report = TheoremReport(
            theorem="T3.4",
            instance="n2m1-00000",
            status=CheckStatus.COUNTEREXAMPLE,
            family_size=8,
            grid="{0, 1}",
            checked=3,
            witness={"claim": "x", "subset": "0"},
            truncated=True,
            notes=["note"],
        )
        assert TheoremReport.from_dict(report.to_dict()) == report

    def test_optional_fields_are_omitted(self):
        document = TheoremReport("T3.4", "a", CheckStatus.VERIFIED, family_size=8).to_dict()
        assert set(document) == {"theorem", "instance", "status", "family_size", "grid", "checked"}


class TestCompleteGrid:
    """n+1 grade levels agree with the default three-level grid"""

    ORACLE_CHECKS = ["T3.4", "T3.5", "T3.6", "T3.7", "T3.12", "T3.13", "T5.6", "T5.7", "T5.17", "T5.18", "L5.12"]

    def test_seeded_instances_agree(self):
        corpus = [(f"sample-{i}", s) for i, s in enumerate(seeded_sample(3, 1, 5, seed=11))]
        default = verify_corpus(corpus, GRID, theorem_ids=self.ORACLE_CHECKS)
        complete = verify_corpus(corpus, theorem_ids=self.ORACLE_CHECKS, complete=True)
        assert default.ok and complete.ok
        assert [(r.theorem, r.instance, r.status) for r in default.results] == [
            (r.theorem, r.instance, r.status) for r in complete.results
        ]
        assert {r.family_size for r in complete.results if r.theorem == "T5.17"} == {4 ** 3 - 1}
