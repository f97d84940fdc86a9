"""Check records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    tag: str
    passed: bool
    witness: Any = None
    detail: str = ""


@dataclass
class CheckList:
    checks: list[Check] = field(default_factory=list)

    def add(self, tag: str, passed: bool, witness: Any = None, detail: str = "") -> bool:
        self.checks.append(Check(tag, bool(passed), None if passed else witness, detail))
        return bool(passed)

    def extend(self, other) -> None:
        self.checks.extend(other.checks if isinstance(other, CheckList) else other)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, tag: str) -> Check:
        for c in self.checks:
            if c.tag == tag:
                return c
        raise KeyError(tag)

    def __iter__(self):
        return iter(self.checks)

    def __len__(self) -> int:
        return len(self.checks)
