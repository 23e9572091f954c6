"""
Checks for fuzzy quasi ideals: composition and pointwise forms, decompositions,
transport along homomorphisms and the regularity / idempotency characterizations.
"""

import logging
from itertools import product

from tools.core_algebra import ElementSubset, IdealKind, check_crisp, subset_product
from tools.fuzzy_engine import characteristic, check_fuzzy_quasi_pointwise, compose, eq, join, leq, level_sets_satisfy, meet
from tools.errors import GuardExceededError
from tools.morphisms import pullback, pushforward
from verifier.catalog import register
from verifier.checks.common import equivalence, holds_on, singles
from verifier.context import VerificationContext
from verifier.models import CheckResult, counterexample, hypothesis_not_met, verified

logger = logging.getLogger(__name__)


def _decomposition(ctx: VerificationContext, mu):
    """(μ ∪ μ∘χ, χ∘μ ∪ μ): the right and left factors of a fuzzy quasi ideal."""
    return join(mu, ctx.compose(mu, ctx.chi)), join(ctx.compose(ctx.chi, mu), mu)


def _one_sided_pairs(ctx: VerificationContext):
    return product(ctx.members(IdealKind.RIGHT), ctx.members(IdealKind.LEFT))


@register("P5.2")
def check_p5_2(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        checked += 1
        left = ctx.holds(IdealKind.LEFT, mu)
        right = ctx.holds(IdealKind.RIGHT, mu)
        quasi = ctx.holds(IdealKind.QUASI, mu)
        if left != leq(ctx.compose(ctx.chi, mu), mu):
            return counterexample("fuzzy left ideal disagrees with χ∘μ ⊆ μ", checked, mu=mu.to_text())
        if right != leq(ctx.compose(mu, ctx.chi), mu):
            return counterexample("fuzzy right ideal disagrees with μ∘χ ⊆ μ", checked, mu=mu.to_text())
        if (left or right) and not quasi:
            return counterexample("fuzzy one-sided ideal is not a fuzzy quasi ideal", checked, mu=mu.to_text())
        if quasi and not ctx.holds(IdealKind.BI, mu):
            return counterexample("fuzzy quasi ideal is not a fuzzy bi-ideal", checked, mu=mu.to_text())
    return verified(checked)


@register("P5.3")
def check_p5_3(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for mu in ctx.members(IdealKind.QUASI):
        checked += 1
        right_factor, left_factor = _decomposition(ctx, mu)
        if not eq(mu, meet(right_factor, left_factor)):
            return counterexample("fuzzy quasi ideal differs from its decomposition", checked, mu=mu.to_text())
        if not ctx.holds(IdealKind.RIGHT, right_factor) or not ctx.holds(IdealKind.LEFT, left_factor):
            return counterexample("decomposition factors are not one-sided ideals", checked, mu=mu.to_text())
    for rho, lam in _one_sided_pairs(ctx):
        both = meet(rho, lam)
        if both.is_empty():
            continue
        checked += 1
        if not ctx.holds(IdealKind.QUASI, both):
            return counterexample("ρ ∩ λ is not a fuzzy quasi ideal", checked, rho=rho.to_text(), lam=lam.to_text())
    return verified(checked)


def _products_are(ctx: VerificationContext, kind: IdealKind) -> CheckResult:
    if not ctx.profile.regular:
        return hypothesis_not_met("requires a regular Γ-semigroup")
    checked = 0
    for rho, lam in _one_sided_pairs(ctx):
        checked += 1
        if not ctx.holds(kind, ctx.compose(rho, lam)):
            return counterexample(f"ρ∘λ is not a fuzzy {kind.value} ideal", checked, rho=rho.to_text(), lam=lam.to_text())
    return verified(checked)


@register("C5.4")
def check_c5_4(ctx: VerificationContext) -> CheckResult:
    return _products_are(ctx, IdealKind.QUASI)


@register("P5.5")
def check_p5_5(ctx: VerificationContext) -> CheckResult:
    return _products_are(ctx, IdealKind.BI)


@register("T5.6")
def check_t5_6(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for subset in ctx.subsets:
        checked += 1
        crisp = check_crisp(IdealKind.QUASI, subset)
        fuzzy = ctx.holds(IdealKind.QUASI, characteristic(subset))
        if crisp != fuzzy:
            return counterexample(
                f"crisp quasi = {crisp} but characteristic function gives {fuzzy}", checked, subset=subset.to_text()
            )
    return verified(checked)


@register("T5.7")
def check_t5_7(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        checked += 1
        fuzzy = ctx.holds(IdealKind.QUASI, mu)
        cuts = level_sets_satisfy(IdealKind.QUASI, mu)
        if fuzzy != cuts:
            return counterexample(f"fuzzy quasi = {fuzzy} but level sets give {cuts}", checked, mu=mu.to_text())
    return verified(checked)


@register("P5.8")
def check_p5_8(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for f in ctx.endomorphisms:
        chi_back = pullback(f, ctx.chi)
        for kind in (IdealKind.LEFT, IdealKind.RIGHT):
            for lam in ctx.members(kind):
                preimage = pullback(f, lam)
                if preimage.is_empty():
                    continue
                checked += 1
                product_ = ctx.compose(chi_back, preimage) if kind is IdealKind.LEFT else ctx.compose(preimage, chi_back)
                if not leq(product_, preimage) or not ctx.holds(kind, preimage):
                    return counterexample(
                        f"preimage of a fuzzy {kind.value} ideal fails", checked, kind=kind.value, map=f.to_text(), lam=lam.to_text()
                    )
    return verified(checked)


@register("P5.9")
def check_p5_9(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for f in ctx.endomorphisms:
        for lam in ctx.members(IdealKind.QUASI):
            preimage = pullback(f, lam)
            if preimage.is_empty():
                continue
            checked += 1
            right_factor, left_factor = _decomposition(ctx, lam)
            if not ctx.holds(IdealKind.QUASI, preimage):
                return counterexample("preimage of a fuzzy quasi ideal is not one", checked, map=f.to_text(), lam=lam.to_text())
            if not eq(pullback(f, meet(right_factor, left_factor)), meet(pullback(f, right_factor), pullback(f, left_factor))):
                return counterexample(
                    "preimage does not commute with the decomposition", checked, map=f.to_text(), lam=lam.to_text()
                )
    return verified(checked)


@register("P5.10")
def check_p5_10(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for f in ctx.surjective_homomorphisms:
        chi_image = pushforward(f, ctx.chi)
        for kind in (IdealKind.LEFT, IdealKind.RIGHT):
            for lam in ctx.members(kind):
                checked += 1
                image = pushforward(f, lam)
                product_ = compose(chi_image, image) if kind is IdealKind.LEFT else compose(image, chi_image)
                if not leq(product_, image):
                    return counterexample(
                        f"image of a fuzzy {kind.value} ideal fails", checked, kind=kind.value, map=f.to_text(), lam=lam.to_text()
                    )
    return verified(checked)


@register("P5.11")
def check_p5_11(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for f in ctx.surjective_homomorphisms:
        for lam in ctx.members(IdealKind.QUASI):
            checked += 1
            image = pushforward(f, lam)
            right_factor, left_factor = _decomposition(ctx, lam)
            # f(λ) ≤ f(ρ) ∩ f(ν) always; equality is the quasi inclusion for f(λ)
            if not eq(image, meet(pushforward(f, right_factor), pushforward(f, left_factor))):
                return counterexample("image does not commute with the decomposition", checked, map=f.to_text(), lam=lam.to_text())
            if not holds_on(IdealKind.QUASI, image):
                return counterexample("image of a fuzzy quasi ideal is not one", checked, map=f.to_text(), lam=lam.to_text())
    return verified(checked)


@register("L5.12")
def check_l5_12(ctx: VerificationContext) -> CheckResult:
    structure = ctx.structure
    guard = ctx.settings.lemma_subset_guard
    if structure.n > guard:
        raise GuardExceededError(f"subset pairs are enumerated only when n ≤ {guard}, got n={structure.n}")
    subsets = [ElementSubset.from_mask(structure, mask) for mask in range(1 << structure.n)]
    checked = 0
    for a, b in product(subsets, repeat=2):
        checked += 1
        chi_a, chi_b = characteristic(a), characteristic(b)
        witness = {"subset_a": a.to_text(), "subset_b": b.to_text()}
        if (a <= b) != leq(chi_a, chi_b):
            return counterexample("inclusion is not reflected by characteristic functions", checked, **witness)
        if not eq(meet(chi_a, chi_b), characteristic(a & b)):
            return counterexample("χ_A ∩ χ_B differs from χ_{A∩B}", checked, **witness)
        if not eq(ctx.compose(chi_a, chi_b), characteristic(subset_product(a, b))):
            return counterexample("χ_A∘χ_B differs from χ_{AΓB}", checked, **witness)
    return verified(checked)


@register("T5.13")
def check_t5_13(ctx: VerificationContext) -> CheckResult:
    regular = ctx.profile.regular
    chi = ctx.chi
    conditions = [
        (
            "products of one-sided ideals equal their intersection",
            _one_sided_pairs(ctx),
            lambda rho, lam: eq(ctx.compose(rho, lam), meet(rho, lam)),
            ("rho", "lam"),
        ),
        (
            "fuzzy right ideals are idempotent",
            singles(ctx.members(IdealKind.RIGHT)),
            lambda rho: eq(ctx.compose(rho, rho), rho),
            ("rho",),
        ),
        (
            "fuzzy left ideals are idempotent",
            singles(ctx.members(IdealKind.LEFT)),
            lambda lam: eq(ctx.compose(lam, lam), lam),
            ("lam",),
        ),
        (
            "products of one-sided ideals are fuzzy quasi ideals",
            _one_sided_pairs(ctx),
            lambda rho, lam: ctx.holds(IdealKind.QUASI, ctx.compose(rho, lam)),
            ("rho", "lam"),
        ),
        (
            "δ = δ∘χ∘δ for fuzzy quasi ideals",
            singles(ctx.members(IdealKind.QUASI)),
            lambda delta: eq(delta, ctx.compose(ctx.compose(delta, chi), delta)),
            ("delta",),
        ),
    ]
    results = {}
    checked = 0
    for label, candidates, condition, names in conditions:
        outcome = equivalence(label, regular, candidates, condition, names)
        checked += outcome.checked
        results[label] = outcome.fuzzy_side
        if regular and outcome.failure is not None:
            return outcome.failure

    if regular:
        return verified(checked)

    # (3) is one conjunction: only the whole must fail
    second = results["products of one-sided ideals equal their intersection"]
    third = (
        results["fuzzy right ideals are idempotent"]
        and results["fuzzy left ideals are idempotent"]
        and results["products of one-sided ideals are fuzzy quasi ideals"]
    )
    fourth = results["δ = δ∘χ∘δ for fuzzy quasi ideals"]
    for name, holds in (("(2)", second), ("(3)", third), ("(4)", fourth)):
        if holds:
            return counterexample(f"not regular, but condition {name} holds over the whole family", checked, condition=name)
    return verified(checked)


def _quasi_ideals_idempotent(ctx: VerificationContext) -> bool:
    return all(subset_product(q, q) == q for q in ctx.crisp_ideals(IdealKind.QUASI))


@register("T5.14")
def check_t5_14(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    structural = profile.regular and profile.intra_regular
    quasi_ideals = ctx.crisp_ideals(IdealKind.QUASI)
    for q in quasi_ideals:
        if subset_product(q, q) != q and structural:
            return counterexample("regular and intra-regular but QΓQ ≠ Q", len(quasi_ideals), subset=q.to_text())
    if not structural and _quasi_ideals_idempotent(ctx):
        return counterexample("every quasi ideal is idempotent yet S is not regular and intra-regular", len(quasi_ideals))
    return verified(len(quasi_ideals))


def _idempotent(ctx: VerificationContext):
    return lambda mu: eq(ctx.compose(mu, mu), mu)


@register("T5.15")
def check_t5_15(ctx: VerificationContext) -> CheckResult:
    outcome = equivalence(
        "every quasi ideal is idempotent",
        _quasi_ideals_idempotent(ctx),
        singles(ctx.members(IdealKind.QUASI)),
        _idempotent(ctx),
        ("delta",),
    )
    return outcome.failure or verified(outcome.checked)


@register("T5.16")
def check_t5_16(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    structural = profile.regular and profile.intra_regular
    checked = 0
    for kind, name in ((IdealKind.QUASI, "delta"), (IdealKind.BI, "mu")):
        outcome = equivalence(
            f"regular and intra-regular (fuzzy {kind.value} idempotency)",
            structural,
            singles(ctx.members(kind)),
            _idempotent(ctx),
            (name,),
        )
        checked += outcome.checked
        if outcome.failure is not None:
            return outcome.failure
    return verified(checked)


def _pointwise(ctx: VerificationContext, variant: str) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        checked += 1
        composed = ctx.holds(IdealKind.QUASI, mu)
        pointwise = check_fuzzy_quasi_pointwise(mu, variant)
        if composed != pointwise:
            return counterexample(
                f"quasi predicate = {composed} but {variant} pointwise form is {pointwise}", checked, mu=mu.to_text()
            )
    return verified(checked)


@register("T5.17")
def check_t5_17(ctx: VerificationContext) -> CheckResult:
    return _pointwise(ctx, "min")


@register("T5.18")
def check_t5_18(ctx: VerificationContext) -> CheckResult:
    return _pointwise(ctx, "maxmin")
