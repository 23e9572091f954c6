"""
Checks tying structural properties (regularity, duo, zero, simplicity,
idempotents) to the behaviour of fuzzy ideals.
"""

import logging
from typing import List

from tools.core_algebra import IdealKind, check_crisp
from tools.fuzzy_engine import FuzzySubset, leq, meet
from verifier.catalog import register
from verifier.checks.common import equivalence, singles
from verifier.context import VerificationContext
from verifier.models import CheckResult, counterexample, hypothesis_not_met, verified

logger = logging.getLogger(__name__)


def _run_equivalences(ctx: VerificationContext, cases) -> CheckResult:
    """cases: (label, structural flag, member kind, condition on μ)"""
    checked = 0
    for label, structural, kind, condition in cases:
        outcome = equivalence(label, structural, singles(ctx.members(kind)), condition)
        checked += outcome.checked
        if outcome.failure is not None:
            return outcome.failure
    return verified(checked)


@register("T4.7")
def check_t4_7(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not (profile.regular and (profile.left_duo or profile.right_duo)):
        return hypothesis_not_met("requires a regular left duo or right duo Γ-semigroup")
    sides = []
    if profile.left_duo:
        sides.append(IdealKind.RIGHT)
    if profile.right_duo:
        sides.append(IdealKind.LEFT)
    if profile.duo:
        sides.append(IdealKind.TWO_SIDED)
    checked = 0
    for side in sides:
        for mu in ctx.members():
            checked += 1
            if ctx.holds(side, mu) != ctx.holds(IdealKind.BI, mu):
                return counterexample(f"fuzzy {side.value} and fuzzy bi disagree", checked, kind=side.value, mu=mu.to_text())
    return verified(checked)


@register("T4.8")
def check_t4_8(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not (profile.regular and profile.left_duo):
        return hypothesis_not_met("requires a regular left duo Γ-semigroup")
    checked = 0
    for mu in ctx.members():
        checked += 1
        if ctx.holds(IdealKind.BI, mu) != ctx.holds(IdealKind.ONE_TWO, mu):
            return counterexample("fuzzy bi and fuzzy (1,2) disagree", checked, mu=mu.to_text())
    return verified(checked)


@register("T4.9")
def check_t4_9(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not profile.regular:
        return hypothesis_not_met("requires a regular Γ-semigroup")
    two_sided = lambda mu: ctx.holds(IdealKind.TWO_SIDED, mu)
    return _run_equivalences(
        ctx,
        [
            ("left duo", profile.left_duo, IdealKind.LEFT, two_sided),
            ("right duo", profile.right_duo, IdealKind.RIGHT, two_sided),
        ],
    )


@register("T4.10")
def check_t4_10(ctx: VerificationContext) -> CheckResult:
    if not ctx.profile.regular:
        return hypothesis_not_met("requires a regular Γ-semigroup")
    bi_ideals = ctx.crisp_ideals(IdealKind.BI)
    cases = []
    for side in (IdealKind.RIGHT, IdealKind.LEFT, IdealKind.TWO_SIDED):
        crisp = all(check_crisp(side, ideal) for ideal in bi_ideals)
        cases.append((f"every bi-ideal is a {side.value} ideal", crisp, IdealKind.BI, lambda mu, side=side: ctx.holds(side, mu)))
    return _run_equivalences(ctx, cases)


@register("P4.13")
def check_p4_13(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not (profile.left_zero or profile.right_zero):
        return hypothesis_not_met("requires a left zero or right zero Γ-semigroup")
    checked = 0
    for flag, kind in ((profile.left_zero, IdealKind.LEFT), (profile.right_zero, IdealKind.RIGHT)):
        if not flag:
            continue
        for mu in ctx.members(kind):
            checked += 1
            if not mu.is_constant():
                return counterexample(f"non-constant fuzzy {kind.value} ideal", checked, kind=kind.value, mu=mu.to_text())
    return verified(checked)


def _strict_note(ctx: VerificationContext, label: str, strict: bool, kind: IdealKind, on) -> str:
    fuzzy = all(mu.is_constant(on=on) for mu in ctx.members(kind))
    return f"strict ∀β reading of {label}: {str(strict).lower()}; fuzzy {kind.value} ideals constant: {str(fuzzy).lower()}"


@register("T4.14")
def check_t4_14(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not profile.regular:
        return hypothesis_not_met("requires a regular Γ-semigroup")
    idempotents = list(profile.idempotents)
    result = _run_equivalences(
        ctx,
        [
            ("idempotents left zero", profile.idempotents_left_zero, IdealKind.LEFT, lambda mu: mu.is_constant(on=idempotents)),
            ("idempotents right zero", profile.idempotents_right_zero, IdealKind.RIGHT, lambda mu: mu.is_constant(on=idempotents)),
        ],
    )
    notes = (
        _strict_note(ctx, "idempotents left zero", profile.strict_idempotents_left_zero, IdealKind.LEFT, idempotents),
        _strict_note(ctx, "idempotents right zero", profile.strict_idempotents_right_zero, IdealKind.RIGHT, idempotents),
    )
    return CheckResult(result.status, result.checked, result.witness, notes)


@register("C4.15")
def check_c4_15(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not profile.idempotent:
        return hypothesis_not_met("requires every element to be idempotent")
    result = _run_equivalences(
        ctx,
        [
            ("weakly left zero", profile.weakly_left_zero, IdealKind.LEFT, lambda mu: mu.is_constant()),
            ("weakly right zero", profile.weakly_right_zero, IdealKind.RIGHT, lambda mu: mu.is_constant()),
        ],
    )
    notes = (
        _strict_note(ctx, "left zero", profile.left_zero, IdealKind.LEFT, None),
        _strict_note(ctx, "right zero", profile.right_zero, IdealKind.RIGHT, None),
    )
    return CheckResult(result.status, result.checked, result.witness, notes)


def _square_stable(ctx: VerificationContext, mu: FuzzySubset) -> bool:
    """∀a ∃β: μ(a) = μ(aβa)"""
    s = ctx.structure
    return all(any(mu[a] == mu[s.mul(a, beta, a)] for beta in s.gammas) for a in s.elements)


def _global_beta_note(ctx: VerificationContext, kind: IdealKind) -> str:
    """Whether one β serves every a and every family member of the kind."""
    s = ctx.structure
    members = ctx.members(kind)
    holding: List[int] = [
        beta for beta in s.gammas if all(mu[a] == mu[s.mul(a, beta, a)] for mu in members for a in s.elements)
    ]
    listed = ",".join(str(b) for b in holding) or "none"
    return f"global β reading for fuzzy {kind.value} ideals: β ∈ {{{listed}}}"


@register("T4.17")
def check_t4_17(ctx: VerificationContext) -> CheckResult:
    result = _run_equivalences(
        ctx,
        [("intra-regular", ctx.profile.intra_regular, IdealKind.TWO_SIDED, lambda mu: _square_stable(ctx, mu))],
    )
    return CheckResult(result.status, result.checked, result.witness, (_global_beta_note(ctx, IdealKind.TWO_SIDED),))


@register("T4.18")
def check_t4_18(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    stable = lambda mu: _square_stable(ctx, mu)
    result = _run_equivalences(
        ctx,
        [
            ("left regular", profile.left_regular, IdealKind.LEFT, stable),
            ("right regular", profile.right_regular, IdealKind.RIGHT, stable),
        ],
    )
    notes = (_global_beta_note(ctx, IdealKind.LEFT), _global_beta_note(ctx, IdealKind.RIGHT))
    return CheckResult(result.status, result.checked, result.witness, notes)


@register("P4.19")
def check_p4_19(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not (profile.regular and profile.intra_regular):
        return hypothesis_not_met("requires a regular and intra-regular Γ-semigroup")
    checked = 0
    bi_members = ctx.members(IdealKind.BI)
    for mu1 in bi_members:
        for mu2 in bi_members:
            checked += 1
            floor = meet(mu1, mu2)
            forward = ctx.compose(mu1, mu2)
            both = meet(forward, ctx.compose(mu2, mu1))
            if not (leq(floor, forward) and leq(floor, both)):
                return counterexample(
                    "products of fuzzy bi-ideals do not contain their intersection",
                    checked,
                    mu1=mu1.to_text(),
                    mu2=mu2.to_text(),
                )
    return verified(checked)


@register("T4.24")
def check_t4_24(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    constant = lambda mu: mu.is_constant()
    return _run_equivalences(
        ctx,
        [
            ("left simple", profile.left_simple, IdealKind.LEFT, constant),
            ("right simple", profile.right_simple, IdealKind.RIGHT, constant),
            ("simple", profile.simple, IdealKind.TWO_SIDED, constant),
        ],
    )


@register("T4.25")
def check_t4_25(ctx: VerificationContext) -> CheckResult:
    profile = ctx.profile
    if not (profile.left_simple or profile.right_simple):
        return hypothesis_not_met("requires a left simple or right simple Γ-semigroup")
    checked = 0
    for flag, side in ((profile.left_simple, IdealKind.RIGHT), (profile.right_simple, IdealKind.LEFT)):
        if not flag:
            continue
        for mu in ctx.members(IdealKind.BI):
            checked += 1
            if not ctx.holds(side, mu):
                return counterexample(f"fuzzy bi-ideal is not a fuzzy {side.value} ideal", checked, kind=side.value, mu=mu.to_text())
    return verified(checked)
