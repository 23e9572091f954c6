"""
Helpers shared by the check modules.
"""

from typing import Callable, Iterable, NamedTuple, Optional, Sequence, Tuple

from tools.core_algebra import IdealKind
from tools.fuzzy_engine import FuzzySubset, check_fuzzy
from verifier.models import CheckResult, counterexample


class Equivalence(NamedTuple):
    failure: Optional[CheckResult]
    checked: int
    fuzzy_side: bool


def equivalence(
    label: str,
    structural: bool,
    candidates: Iterable[Tuple[FuzzySubset, ...]],
    condition: Callable[..., bool],
    names: Sequence[str] = ("mu",),
) -> Equivalence:
    """
    Compare a structural flag with "condition holds for every candidate".

    When the flag is true a failing candidate is the counterexample; when it is
    false the family must contain a failing candidate.
    """
    checked = 0
    for candidate in candidates:
        checked += 1
        if not condition(*candidate):
            if structural:
                witness = {name: mu.to_text() for name, mu in zip(names, candidate)}
                return Equivalence(counterexample(f"{label} holds but the fuzzy side fails", checked, **witness), checked, False)
            return Equivalence(None, checked, False)
    if structural:
        return Equivalence(None, checked, True)
    return Equivalence(
        counterexample(f"{label} fails but no family member violates the fuzzy side", checked), checked, True
    )


def singles(members: Iterable[FuzzySubset]) -> Iterable[Tuple[FuzzySubset]]:
    return ((mu,) for mu in members)


def holds_on(kind: IdealKind, mu: FuzzySubset) -> bool:
    """Fuzzy predicate with non-empty support, for subsets of structures other than the context's."""
    return not mu.is_empty() and check_fuzzy(kind, mu)
