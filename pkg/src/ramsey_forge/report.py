"""Structured verdicts shared by the fast checker and the oracle.

A report carries one tri-state flag per condition, evaluated in the
fixed order

    symmetric -> sum_free -> cyclic_basis -> triangle

with evaluation stopping at the first failure: flags after a False are
None (skipped), which serializes to JSON null.  `overall` is True only
when all four flags are True.  A report that is not overall-True
carries a witness pinpointing the first violation found.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

CONDITIONS = ("symmetric", "sum_free", "cyclic_basis", "triangle")


@dataclass(frozen=True)
class Witness:
    """First violation of a condition: which classes, and the smallest
    residue exhibiting the failure (smallest class indices first, then
    smallest residue, so witnesses are deterministic and re-checkable).
    """

    condition: str
    classes: tuple[int, ...]
    residue: int

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "classes": list(self.classes),
            "residue": self.residue,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(d["condition"], tuple(d["classes"]), d["residue"])


@dataclass(frozen=True)
class CheckReport:
    symmetric: bool | None
    sum_free: bool | None
    cyclic_basis: bool | None
    triangle: bool | None
    witness: Witness | None = None

    def __post_init__(self):
        if (self.witness is None) != self.overall:
            raise ValueError("witness must be present exactly when a condition fails")

    @property
    def overall(self) -> bool:
        return (
            self.symmetric is True
            and self.sum_free is True
            and self.cyclic_basis is True
            and self.triangle is True
        )

    def flags(self) -> tuple[bool | None, ...]:
        return (self.symmetric, self.sum_free, self.cyclic_basis, self.triangle)

    @property
    def failed_condition(self) -> str | None:
        """Name of the first failing condition, or None when all pass."""
        for name, flag in zip(CONDITIONS, self.flags()):
            if flag is False:
                return name
        return None

    def to_dict(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "sum_free": self.sum_free,
            "cyclic_basis": self.cyclic_basis,
            "triangle": self.triangle,
            "witness": None if self.witness is None else self.witness.to_dict(),
            "overall": self.overall,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        w = d.get("witness")
        return cls(
            d["symmetric"],
            d["sum_free"],
            d["cyclic_basis"],
            d["triangle"],
            None if w is None else Witness.from_dict(w),
        )

    @classmethod
    def all_passed(cls) -> "CheckReport":
        return cls(True, True, True, True, None)
