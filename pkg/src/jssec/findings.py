"""Finding model shared by rules, engine and reporting."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .source import Span


class Severity(Enum):
    INFO = "info"
    WARNING = "warning"
    ERROR = "error"

    @property
    def rank(self) -> int:
        return {"info": 0, "warning": 1, "error": 2}[self.value]


@dataclass(frozen=True)
class TaintStep:
    span: Span
    description: str


@dataclass
class Finding:
    rule_id: str
    severity: Severity
    message: str
    path: str
    unit_id: str
    span: Span
    cwe_ids: list[str]
    owasp_category: str
    refactoring_hint: str
    taint_chain: list[TaintStep] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def sort_key(self) -> tuple:
        return (self.path, self.unit_id, self.span.start, self.span.end, self.rule_id)

    def identity(self) -> tuple:
        """Deduplication key: one finding per rule per span per unit."""
        return (self.unit_id, self.span.start, self.span.end, self.rule_id)
