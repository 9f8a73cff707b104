"""Law-by-law check reports shared by every validator."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


@dataclass
class LawResult:
    law: str
    passed: bool
    depth: Optional[int] = None
    checked: int = 0
    counterexample: Optional[str] = None

    def record(self) -> dict:
        rec = {"law": self.law, "status": "pass" if self.passed else "fail",
               "depth": self.depth, "checked": self.checked}
        if not self.passed:
            rec["counterexample"] = self.counterexample
        return rec


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failed(self) -> list:
        return [e.law for e in self.entries if not e.passed]

    def __getitem__(self, law: str) -> LawResult:
        for e in self.entries:
            if e.law == law:
                return e
        raise KeyError(law)

    def __contains__(self, law: str) -> bool:
        return any(e.law == law for e in self.entries)

    def add(self, law, passed, depth=None, checked=0, counterexample=None) -> LawResult:
        r = LawResult(law, bool(passed), depth, checked, None if passed else counterexample)
        self.entries.append(r)
        return r

    def extend(self, other: "CheckReport", prefix: str = "") -> "CheckReport":
        for e in other.entries:
            self.entries.append(LawResult(prefix + e.law, e.passed, e.depth, e.checked,
                                          e.counterexample))
        return self

    def to_ndjson(self) -> str:
        return "".join(json.dumps(e.record(), sort_keys=True) + "\n" for e in self.entries)

    def summary(self) -> str:
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            line = f"{mark} {e.law} (depth={e.depth}, checked={e.checked})"
            if not e.passed:
                line += f": {e.counterexample}"
            lines.append(line)
        return "\n".join(lines)

    def __str__(self):
        return self.summary()


class Law:
    """Accumulates instances of one law; keeps the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.counterexample: Optional[str] = None

    def check(self, ok: bool, describe) -> bool:
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = describe() if callable(describe) else str(describe)
        return ok

    def fail(self, describe):
        return self.check(False, describe)

    def into(self, report: CheckReport, depth: Optional[int]) -> LawResult:
        return report.add(self.name, self.counterexample is None, depth, self.checked,
                          self.counterexample)
