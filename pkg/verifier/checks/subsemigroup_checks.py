"""
Checks for fuzzy subsemigroups, fuzzy one-sided ideals, fuzzy bi-ideals and fuzzy
(1,2)-ideals: crisp bridges, level sets, closure properties and composition forms.
"""

import logging

from tools.core_algebra import IdealKind, check_crisp
from tools.fuzzy_engine import characteristic, leq, level_sets_satisfy, meet, power
from tools.morphisms import endo_transport, pullback, pushforward
from verifier.catalog import register
from verifier.checks.common import holds_on
from verifier.context import VerificationContext
from verifier.models import CheckResult, counterexample, verified

logger = logging.getLogger(__name__)

ONE_SIDED_KINDS = (IdealKind.SUBSEMIGROUP, IdealKind.LEFT, IdealKind.RIGHT, IdealKind.TWO_SIDED)
BI_KINDS = (IdealKind.BI, IdealKind.ONE_TWO)
CLOSED_KINDS = (IdealKind.SUBSEMIGROUP, IdealKind.BI)


def characteristic_bridge(ctx: VerificationContext, kinds) -> CheckResult:
    checked = 0
    for subset in ctx.subsets:
        chi_subset = characteristic(subset)
        for kind in kinds:
            crisp = check_crisp(kind, subset)
            fuzzy = ctx.holds(kind, chi_subset)
            checked += 1
            if crisp != fuzzy:
                return counterexample(
                    f"crisp {kind.value} = {crisp} but characteristic function gives {fuzzy}",
                    checked,
                    kind=kind.value,
                    subset=subset.to_text(),
                )
    return verified(checked)


def level_set_bridge(ctx: VerificationContext, kinds) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        for kind in kinds:
            fuzzy = ctx.holds(kind, mu)
            cuts = level_sets_satisfy(kind, mu)
            checked += 1
            if fuzzy != cuts:
                return counterexample(
                    f"fuzzy {kind.value} = {fuzzy} but level sets give {cuts}",
                    checked,
                    kind=kind.value,
                    mu=mu.to_text(),
                )
    return verified(checked)


@register("T3.4")
def check_t3_4(ctx: VerificationContext) -> CheckResult:
    return characteristic_bridge(ctx, ONE_SIDED_KINDS)


@register("T3.5")
def check_t3_5(ctx: VerificationContext) -> CheckResult:
    return characteristic_bridge(ctx, BI_KINDS)


@register("T3.6")
def check_t3_6(ctx: VerificationContext) -> CheckResult:
    return level_set_bridge(ctx, ONE_SIDED_KINDS)


@register("T3.7")
def check_t3_7(ctx: VerificationContext) -> CheckResult:
    return level_set_bridge(ctx, BI_KINDS)


@register("P3.8")
def check_p3_8(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for kind in CLOSED_KINDS:
        members = ctx.members(kind)
        for i, mu in enumerate(members):
            for sigma in members[i:]:
                both = meet(mu, sigma)
                if both.is_empty():
                    continue
                checked += 1
                if not ctx.holds(kind, both):
                    return counterexample(
                        f"meet of two fuzzy {kind.value} members is not one",
                        checked,
                        kind=kind.value,
                        mu=mu.to_text(),
                        sigma=sigma.to_text(),
                    )
    return verified(checked)


@register("P3.9")
def check_p3_9(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for f in ctx.endomorphisms:
        for kind in CLOSED_KINDS:
            for lam in ctx.members(kind):
                preimage = pullback(f, lam)
                if preimage.is_empty():
                    continue
                checked += 1
                if not ctx.holds(kind, preimage):
                    return counterexample(
                        f"preimage of a fuzzy {kind.value} member is not one",
                        checked,
                        kind=kind.value,
                        map=f.to_text(),
                        lam=lam.to_text(),
                    )
    for f in ctx.surjective_homomorphisms:
        for kind in CLOSED_KINDS:
            for mu in ctx.members(kind):
                checked += 1
                if not holds_on(kind, pushforward(f, mu)):
                    return counterexample(
                        f"image of a fuzzy {kind.value} member is not one",
                        checked,
                        kind=kind.value,
                        map=f.to_text(),
                        mu=mu.to_text(),
                    )
    return verified(checked)


@register("P3.10")
def check_p3_10(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for theta in ctx.endomorphisms:
        for kind in CLOSED_KINDS:
            for mu in ctx.members(kind):
                transported = endo_transport(theta, mu)
                if transported.is_empty():
                    continue
                checked += 1
                if not ctx.holds(kind, transported):
                    return counterexample(
                        f"μ[θ] of a fuzzy {kind.value} member is not one",
                        checked,
                        kind=kind.value,
                        map=theta.to_text(),
                        mu=mu.to_text(),
                    )
    return verified(checked)


@register("P3.11")
def check_p3_11(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for kind in CLOSED_KINDS:
        for mu in ctx.members(kind):
            for k in ctx.settings.power_exponents:
                checked += 1
                if not ctx.holds(kind, power(mu, k)):
                    return counterexample(
                        f"power {k} of a fuzzy {kind.value} member is not one",
                        checked,
                        kind=kind.value,
                        mu=mu.to_text(),
                        exponent=str(k),
                    )
    return verified(checked)


@register("T3.12")
def check_t3_12(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        predicate = ctx.holds(IdealKind.SUBSEMIGROUP, mu)
        composed = leq(ctx.compose(mu, mu), mu)
        checked += 1
        if predicate != composed:
            return counterexample(
                f"subsemigroup predicate = {predicate} but μ∘μ ⊆ μ is {composed}", checked, mu=mu.to_text()
            )
    return verified(checked)


@register("T3.13")
def check_t3_13(ctx: VerificationContext) -> CheckResult:
    checked = 0
    for mu in ctx.members():
        predicate = ctx.holds(IdealKind.BI, mu)
        composed = leq(ctx.compose(mu, mu), mu) and leq(ctx.compose(ctx.compose(mu, ctx.chi), mu), mu)
        checked += 1
        if predicate != composed:
            return counterexample(
                f"bi predicate = {predicate} but composition form is {composed}", checked, mu=mu.to_text()
            )
    return verified(checked)
