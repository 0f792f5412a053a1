from __future__ import annotations

from enum import Enum


class Flag(str, Enum):
    """Outcome of a conditional check."""

    PASS = "pass"
    FAIL = "fail"
    NA = "not-applicable"

    @classmethod
    def of(cls, ok: bool) -> Flag:
        return cls.PASS if ok else cls.FAIL

    def __str__(self) -> str:
        return self.value
