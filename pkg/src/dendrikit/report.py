"""Validation reports: every failed identity with its counterexample."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable


@dataclass(frozen=True)
class Violation:
    label: str
    where: tuple
    lhs: tuple
    rhs: tuple
    line: int = 0

    def describe(self, fmt: Callable[[object], str] = str) -> str:
        tag = self.label if not self.line else f"{self.label} line {self.line}"
        where = ",".join(str(i) for i in self.where)
        return f"{tag} fails at ({where}): lhs {_vec(self.lhs, fmt)} != rhs {_vec(self.rhs, fmt)}"


def _vec(v: tuple, fmt) -> str:
    return "[" + ", ".join(fmt(a) for a in v) + "]"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, label: str, where: tuple, lhs: tuple, rhs: tuple, line: int = 0) -> None:
        self.violations.append(Violation(label, tuple(where), tuple(lhs), tuple(rhs), line))

    def check(self, label: str, where: tuple, lhs: tuple, rhs: tuple, line: int = 0) -> bool:
        if tuple(lhs) != tuple(rhs):
            self.add(label, where, lhs, rhs, line)
            return False
        return True

    def extend(self, other: "ValidationReport", relabel: Callable[[Violation], Violation] | None = None) -> None:
        for v in other.violations:
            self.violations.append(relabel(v) if relabel else v)

    def labels(self) -> list[str]:
        seen: list[str] = []
        for v in self.violations:
            if v.label not in seen:
                seen.append(v.label)
        return seen

    def failed(self, label: str) -> bool:
        return any(v.label == label for v in self.violations)

    def lines(self, fmt=str, limit: int | None = None) -> list[str]:
        vs: Iterable[Violation] = self.violations if limit is None else self.violations[:limit]
        return [v.describe(fmt) for v in vs]

    def summary(self, fmt=str, limit: int = 10) -> str:
        if self.ok:
            return "valid"
        out = self.lines(fmt, limit)
        if len(self.violations) > limit:
            out.append(f"... {len(self.violations) - limit} more")
        return "\n".join(out)
