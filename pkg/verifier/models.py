"""
Result records shared by the theorem checks, the orchestrator and the report synthesizer.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple


class CheckStatus(str, Enum):
    VERIFIED = "verified"
    COUNTEREXAMPLE = "counterexample"
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    """What a single check function returns; the orchestrator adds theorem and instance ids."""

    status: CheckStatus
    checked: int = 0
    witness: Optional[Dict[str, str]] = None
    notes: Tuple[str, ...] = ()


def verified(checked: int, notes: Tuple[str, ...] = ()) -> CheckResult:
    return CheckResult(CheckStatus.VERIFIED, checked=checked, notes=tuple(notes))


def counterexample(claim: str, checked: int = 0, **witness: str) -> CheckResult:
    """Witness values are already in the replayable text formats."""
    document = {"claim": claim}
    document.update({key: str(value) for key, value in witness.items()})
    return CheckResult(CheckStatus.COUNTEREXAMPLE, checked=checked, witness=document)


def hypothesis_not_met(reason: str) -> CheckResult:
    return CheckResult(CheckStatus.HYPOTHESIS_NOT_MET, notes=(reason,))


@dataclass
class TheoremReport:
    """Outcome of one theorem on one instance."""

    theorem: str
    instance: str
    status: CheckStatus
    family_size: int = 0
    grid: str = ""
    checked: int = 0
    witness: Optional[Dict[str, str]] = None
    truncated: bool = False
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        document = {
            "theorem": self.theorem,
            "instance": self.instance,
            "status": self.status.value,
            "family_size": self.family_size,
            "grid": self.grid,
            "checked": self.checked,
        }
        if self.witness is not None:
            document["witness"] = dict(self.witness)
        if self.truncated:
            document["truncated"] = True
        if self.notes:
            document["notes"] = list(self.notes)
        return document

    @classmethod
    def from_dict(cls, document: dict) -> "TheoremReport":
        return cls(
            theorem=document["theorem"],
            instance=document["instance"],
            status=CheckStatus(document["status"]),
            family_size=document.get("family_size", 0),
            grid=document.get("grid", ""),
            checked=document.get("checked", 0),
            witness=document.get("witness"),
            truncated=document.get("truncated", False),
            notes=list(document.get("notes", [])),
        )
