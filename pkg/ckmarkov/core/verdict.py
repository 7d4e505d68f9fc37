from __future__ import annotations

from enum import Enum


class Verdict(str, Enum):
    """Three-valued answer: an invariant comparison may be out of reach."""

    TRUE = "true"
    FALSE = "false"
    UNDECIDED = "undecided"

    @classmethod
    def of(cls, value: bool) -> Verdict:
        return cls.TRUE if value else cls.FALSE

    def both(self, other: Verdict) -> Verdict:
        """Conjunction; FALSE dominates UNDECIDED."""
        if Verdict.FALSE in (self, other):
            return Verdict.FALSE
        if Verdict.UNDECIDED in (self, other):
            return Verdict.UNDECIDED
        return Verdict.TRUE

    def to_json(self) -> bool | str:
        if self is Verdict.UNDECIDED:
            return self.value
        return self is Verdict.TRUE
