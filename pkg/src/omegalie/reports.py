"""Verdict reports produced by every checker.

A report is a list of named clauses; each clause carries the exact values of
both sides of its identity at every violating index tuple, so a failure can
be reproduced and diffed without rerunning the checker.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    indices: tuple[int, ...]
    lhs: str
    rhs: str

    def to_document(self) -> dict:
        # 1-based indices in serialized documents, matching the file format.
        return {
            "indices": [i + 1 for i in self.indices],
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class Clause:
    """One checked identity, with its violations (empty means the clause holds)."""

    name: str
    violations: list[Violation] = field(default_factory=list)

    def add(self, indices: tuple[int, ...], lhs, rhs) -> None:
        self.violations.append(Violation(tuple(indices), repr(lhs), repr(rhs)))

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_document(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "violations": [v.to_document() for v in self.violations],
        }


@dataclass
class Report:
    """Outcome of one check: a titled bundle of clauses plus config metadata."""

    title: str
    clauses: list[Clause] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def clause(self, name: str) -> Clause:
        c = Clause(name)
        self.clauses.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.clauses:
            copied = Clause(prefix + c.name, list(c.violations))
            self.clauses.append(copied)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_document(self) -> dict:
        return {
            "kind": "report",
            "title": self.title,
            "verdict": self.verdict,
            "clauses": [c.to_document() for c in self.clauses],
            "meta": self.meta,
        }

    def __repr__(self) -> str:
        parts = ", ".join(f"{c.name}={c.verdict}" for c in self.clauses)
        return f"Report({self.title}: {self.verdict}; {parts})"
