"""
Check results and the verification report both output modes are rendered from.
"""
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class Check:
    name: str
    status: CheckStatus
    detail: str = ""

    @classmethod
    def passed(cls, name, detail=""):
        return cls(name, CheckStatus.PASS, detail)

    @classmethod
    def failed(cls, name, detail):
        return cls(name, CheckStatus.FAIL, detail)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, CheckStatus.SKIPPED, reason)

    @classmethod
    def expect(cls, name, condition, detail):
        return cls(name, CheckStatus.PASS if condition else CheckStatus.FAIL, detail)

    @property
    def ok(self) -> bool:
        return self.status is not CheckStatus.FAIL

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


@dataclass
class VerificationReport:
    subject: str
    checks: List[Check] = field(default_factory=list)
    seed: Optional[int] = None
    facts: Dict[str, Any] = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks):
        for check in checks:
            self.add(check)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status is CheckStatus.FAIL]

    @property
    def exit_status(self) -> int:
        return 1 if self.failures else 0

    def to_dict(self) -> dict:
        data = {"subject": self.subject}
        if self.seed is not None:
            data["seed"] = self.seed
        if self.facts:
            data["facts"] = self.facts
        data["checks"] = [c.to_dict() for c in self.checks]
        data["exit_status"] = self.exit_status
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"subject: {self.subject}"]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        for key, value in self.facts.items():
            lines.append(f"{key}: {value}")
        for c in self.checks:
            suffix = f"  ({c.detail})" if c.detail else ""
            lines.append(f"[{c.status.value:>7}] {c.name}{suffix}")
        passed = sum(1 for c in self.checks if c.status is CheckStatus.PASS)
        skipped = sum(1 for c in self.checks if c.status is CheckStatus.SKIPPED)
        lines.append(f"{passed} passed, {len(self.failures)} failed, {skipped} skipped")
        return "\n".join(lines)
