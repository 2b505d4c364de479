"""Three-valued classification outcomes with provenance."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class Outcome(str, enum.Enum):
    SMOOTHABLE_GENERIC = "SMOOTHABLE_GENERIC"
    NON_SMOOTHABLE = "NON_SMOOTHABLE"
    NON_SMOOTHABLE_GENERIC = "NON_SMOOTHABLE_GENERIC"
    NON_SMOOTHABLE_GENERIC_EQUISINGULAR = "NON_SMOOTHABLE_GENERIC_EQUISINGULAR"
    OBSTRUCTED = "OBSTRUCTED"
    UNKNOWN = "UNKNOWN"

    @property
    def is_negative(self) -> bool:
        return self in (
            Outcome.NON_SMOOTHABLE,
            Outcome.NON_SMOOTHABLE_GENERIC,
            Outcome.NON_SMOOTHABLE_GENERIC_EQUISINGULAR,
            Outcome.OBSTRUCTED,
        )


@dataclass(frozen=True)
class Verdict:
    """A classification result.

    ``provenance`` names the criterion that fired.  An UNKNOWN verdict may
    still carry the provenance of the criterion that was tried, and the
    witnesses record the numbers that made it fail.
    """

    outcome: Outcome
    provenance: str
    witnesses: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome is not Outcome.UNKNOWN and not self.provenance:
            raise ValueError("a decided verdict needs a provenance")

    @classmethod
    def unknown(cls, provenance: str = "", **witnesses) -> "Verdict":
        return cls(Outcome.UNKNOWN, provenance, dict(witnesses))

    @property
    def fired(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def to_dict(self) -> dict[str, Any]:
        return {
            "outcome": self.outcome.value,
            "provenance": self.provenance,
            "witnesses": dict(self.witnesses),
        }
