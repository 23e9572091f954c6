"""
Report Synthesizer
Combines per-(theorem, instance) reports into one corpus report with a summary
table, the machine-readable document and the witness documents of every
counterexample.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from tools.instance_factory import CorpusInstance
from verifier.models import CheckStatus, TheoremReport

logger = logging.getLogger(__name__)

STATUS_ORDER = (
    CheckStatus.VERIFIED,
    CheckStatus.COUNTEREXAMPLE,
    CheckStatus.HYPOTHESIS_NOT_MET,
    CheckStatus.SKIPPED,
)


@dataclass
class CorpusReport:
    version: str
    corpus: List[dict] = field(default_factory=list)
    results: List[TheoremReport] = field(default_factory=list)

    @classmethod
    def build(cls, instances: Sequence[CorpusInstance], results: List[TheoremReport], version: str = "1.0") -> "CorpusReport":
        corpus = [
            {
                "id": item.id,
                "n": item.structure.n,
                "m": item.structure.m,
                "table": item.structure.to_blocks(),
            }
            for item in sorted(instances, key=lambda item: item.id)
        ]
        return cls(version=version, corpus=corpus, results=list(results))

    @property
    def counterexamples(self) -> List[TheoremReport]:
        return [r for r in self.results if r.status is CheckStatus.COUNTEREXAMPLE]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary(self) -> Dict[str, Dict[str, int]]:
        """Status counts per theorem, theorems in report order."""
        counts: Dict[str, Counter] = {}
        for report in self.results:
            counts.setdefault(report.theorem, Counter())[report.status.value] += 1
        return {theorem: {s.value: counter.get(s.value, 0) for s in STATUS_ORDER} for theorem, counter in counts.items()}

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "corpus": self.corpus,
            "results": [report.to_dict() for report in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def instance_table(self, instance_id: str) -> List[List[List[int]]]:
        for entry in self.corpus:
            if entry["id"] == instance_id:
                return entry["table"]
        raise KeyError(instance_id)

    def render_text(self) -> str:
        """Human-readable report: header, per-theorem summary, then counterexample details."""
        summary = self.summary()
        widest = max([len("Theorem")] + [len(theorem) for theorem in summary])
        lines = [
            "# Γ-semigroup Theorem Verification Report",
            "",
            f"**Version:** {self.version}",
            f"**Instances:** {len(self.corpus)}",
            f"**Checks:** {len(self.results)}",
            f"**Result:** {'✅ no counterexamples' if self.ok else f'❌ {len(self.counterexamples)} counterexamples'}",
            "",
            "## Summary",
            "",
            f"{'Theorem'.ljust(widest)}  " + "  ".join(s.value for s in STATUS_ORDER) + "  max_family",
        ]
        family = Counter()
        for report in self.results:
            family[report.theorem] = max(family[report.theorem], report.family_size)
        for theorem, counts in summary.items():
            cells = "  ".join(str(counts[s.value]).rjust(len(s.value)) for s in STATUS_ORDER)
            lines.append(f"{theorem.ljust(widest)}  {cells}  {str(family[theorem]).rjust(len('max_family'))}")

        truncated = sorted({r.instance for r in self.results if r.truncated})
        if truncated:
            lines += ["", f"⚠️ Truncated families on: {', '.join(truncated)}"]

        if self.counterexamples:
            lines += ["", "## Counterexamples", ""]
            for report in self.counterexamples:
                lines.append(f"- {report.theorem} on {report.instance}: {report.witness.get('claim', '')}")
                for key, value in report.witness.items():
                    if key != "claim":
                        lines.append(f"    {key}: {value}")
        return "\n".join(lines) + "\n"

    def witness_documents(self) -> List[dict]:
        """One document per counterexample: ids, the instance blocks and the witness fields."""
        return [
            {
                "theorem": report.theorem,
                "instance": report.instance,
                "table": self.instance_table(report.instance),
                "witness": dict(report.witness or {}),
            }
            for report in self.counterexamples
        ]
