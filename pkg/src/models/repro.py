from dataclasses import dataclass
from typing import Any, Optional, Tuple

from .base import BaseModel


@dataclass(frozen=True)
class ReproCheck(BaseModel):
    id: str
    reference: str
    expected: Any
    computed: Any
    tolerance: Optional[float]
    passed: bool
    detail: Optional[str] = None


@dataclass(frozen=True)
class ReproReport(BaseModel):
    checks: Tuple[ReproCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> Tuple[ReproCheck, ...]:
        return tuple(check for check in self.checks if not check.passed)

    def to_dict(self):
        return {"passed": self.passed, "checks": [check.to_dict() for check in self.checks]}
