"""Check reports: a count of performed checks plus any failure messages."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    subject: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def merge(self, other: "Report"):
        self.checks += other.checks
        self.failures.extend(f"{other.subject}: {m}" for m in other.failures)

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": self.checks,
            "failures": list(self.failures),
        }

    def __str__(self):
        if self.ok:
            return f"{self.subject}: ok ({self.checks} checks)"
        head = f"{self.subject}: FAILED ({len(self.failures)}/{self.checks} checks)"
        return "\n".join([head] + ["  " + m for m in self.failures])
