from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    degree: int | None = None
    index: int | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.degree is not None:
            d["degree"] = self.degree
        if self.index is not None:
            d["index"] = self.index
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class Report:
    """Ordered list of named pass/fail checks plus free-form metadata."""

    title: str
    checks: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, name, passed, degree=None, index=None, detail=""):
        self.checks.append(Check(name, bool(passed), degree, index, detail))

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.degree, c.index, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def names(self) -> set:
        return {c.name for c in self.checks}

    def passed(self, name: str) -> bool:
        """True when every check called ``name`` passed (and at least one exists)."""
        hits = [c for c in self.checks if c.name == name]
        return bool(hits) and all(c.passed for c in hits)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "meta": self.meta,
            "checks": [c.to_dict() for c in self.checks],
        }

    def __repr__(self):
        return "Report(%r, %d checks, %d failed)" % (self.title, len(self.checks), len(self.failures()))
