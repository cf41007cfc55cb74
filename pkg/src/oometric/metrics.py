"""Combined complexity metric and risk classification.

The combined figure is plain addition: decision complexity of the source
plus the class's coupling count. Risk bands over the combined number are
contiguous integer ranges: 1-10 low, 11-20 moderate, 21-40 high, and 41 and
above effectively untestable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional


class RiskLevel(IntEnum):
    LOW = 1
    MODERATE = 2
    HIGH = 3
    UNTESTABLE = 4

    @property
    def label(self) -> str:
        return self.name.capitalize()


class Provenance(Enum):
    SOURCE_ONLY = "source-only"
    CLASS_ONLY = "class-only"
    PAIRED = "paired"


def combine(cc: int, cbo: int) -> int:
    """Combined complexity: cc + cbo."""
    if cc < 1:
        raise ValueError(f"cc must be >= 1, got {cc}")
    if cbo < 0:
        raise ValueError(f"cbo must be >= 0, got {cbo}")
    return cc + cbo


def classify_risk(new_cc: int) -> RiskLevel:
    if new_cc < 1:
        raise ValueError(f"combined complexity must be >= 1, got {new_cc}")
    if new_cc <= 10:
        return RiskLevel.LOW
    if new_cc <= 20:
        return RiskLevel.MODERATE
    if new_cc <= 40:
        return RiskLevel.HIGH
    return RiskLevel.UNTESTABLE


@dataclass(frozen=True)
class MetricsRecord:
    """One report row for one class."""

    class_name: str
    cc: Optional[int]
    cbo: Optional[int]
    new_cc: Optional[int]
    risk: Optional[RiskLevel]
    provenance: Provenance

    @classmethod
    def from_parts(cls, class_name: str, cc: Optional[int], cbo: Optional[int]) -> "MetricsRecord":
        """Build a record; the combined figure exists only for paired inputs."""
        if cc is None and cbo is None:
            raise ValueError(f"record for {class_name!r} needs at least one metric")
        if cc is not None and cbo is not None:
            new_cc = combine(cc, cbo)
            return cls(class_name, cc, cbo, new_cc, classify_risk(new_cc), Provenance.PAIRED)
        if cc is not None:
            return cls(class_name, cc, None, None, None, Provenance.SOURCE_ONLY)
        return cls(class_name, None, cbo, None, None, Provenance.CLASS_ONLY)
