"""Pass/fail records produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}
