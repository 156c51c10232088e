"""Check results and their line-delimited rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .tensor import Comparison

FIELDS = ("verdict", "check", "diagram", "tested", "witness", "lhs", "rhs")


@dataclass
class Finding:
    check: str
    diagram: str
    passed: bool
    tested: int = 0
    witness: str = ""
    lhs: str = ""
    rhs: str = ""

    @classmethod
    def from_comparison(cls, check: str, diagram: str, cmp: Comparison) -> Finding:
        if cmp.equal:
            return cls(check, diagram, True, cmp.tested)
        return cls(check, diagram, False, cmp.tested, str(cmp.witness), str(cmp.lhs), str(cmp.rhs))

    @classmethod
    def compare_all(cls, check: str, diagram: str, cases: Iterable) -> Finding:
        """``cases`` yields ``(witness, lhs, rhs)``; the first unequal pair is the witness."""
        n = 0
        for witness, lhs, rhs in cases:
            n += 1
            if lhs != rhs:
                return cls(check, diagram, False, n, str(witness), str(lhs), str(rhs))
        return cls(check, diagram, True, n)

    def as_dict(self) -> dict:
        return {
            "verdict": "PASS" if self.passed else "FAIL",
            "check": self.check,
            "diagram": self.diagram,
            "tested": self.tested,
            "witness": self.witness,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class Report:
    title: str
    findings: list[Finding] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.findings)

    def __bool__(self):
        return self.passed

    def add(self, finding: Finding) -> Finding:
        self.findings.append(finding)
        return finding

    def extend(self, other: Report, prefix: str = "") -> Report:
        for f in other.findings:
            self.findings.append(Finding(prefix + f.check, f.diagram, f.passed, f.tested, f.witness, f.lhs, f.rhs))
        self.notes.extend(other.notes)
        return self

    def get(self, check: str) -> Finding:
        for f in self.findings:
            if f.check == check:
                return f
        raise KeyError(check)

    def first_failure(self) -> Finding | None:
        return next((f for f in self.findings if not f.passed), None)

    def render(self, fmt: str = "text") -> str:
        rows = [f.as_dict() for f in self.findings]
        summary = {"verdict": "PASS" if self.passed else "FAIL", "check": self.title, "diagram": "summary", "tested": sum(f.tested for f in self.findings)}
        lines = []
        if fmt == "json":
            for note in self.notes:
                lines.append(json.dumps({"note": note}))
            lines.extend(json.dumps(r) for r in rows)
            lines.append(json.dumps(summary))
        elif fmt == "text":
            for note in self.notes:
                lines.append(f"note={note}")
            for r in rows:
                lines.append("\t".join(f"{k}={r[k]}" for k in FIELDS if r[k] != "" or k in ("verdict", "check", "diagram")))
            lines.append("\t".join(f"{k}={v}" for k, v in summary.items()))
        else:
            raise ValueError(f"unknown format {fmt!r}")
        return "\n".join(lines) + "\n"

    def __str__(self):
        return self.render("text")
