"""Machine-readable verification reports.

Every verifier returns a :class:`Report`: one record per law, each with a
stable law id, a human-readable statement of the law, a verdict, and (on
failure) a witness basis vector on which the two sides of the law differ.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional


@dataclass(frozen=True)
class Check:
    law: str
    anchor: str
    passed: bool
    witness: Optional[dict] = None

    def to_dict(self):
        d = {"law": self.law, "anchor": self.anchor, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass(frozen=True)
class Report:
    subject: str
    checks: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self):
        return tuple(c for c in self.checks if not c.passed)

    def named(self, subject: str) -> "Report":
        return replace(self, subject=subject)

    def merged_with(self, other: "Report") -> "Report":
        return Report(self.subject, self.checks + other.checks)

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }

    def render_text(self) -> str:
        lines = [f"[{'PASS' if self.ok else 'FAIL'}] {self.subject}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.law}: {c.anchor}")
            if c.witness is not None:
                lines.append(f"       witness: {c.witness}")
        return "\n".join(lines)


def law_check(law: str, anchor: str, lhs, rhs) -> Check:
    """Compare two matrices entrywise; on failure record the first basis
    vector (column) and row where they differ."""
    if lhs.nrows != rhs.nrows or lhs.ncols != rhs.ncols:
        return Check(law, anchor, False, {"reason": "shape mismatch",
                                          "lhs_shape": [lhs.nrows, lhs.ncols],
                                          "rhs_shape": [rhs.nrows, rhs.ncols]})
    for j in range(lhs.ncols):
        for i in range(lhs.nrows):
            if lhs.rows[i][j] != rhs.rows[i][j]:
                return Check(law, anchor, False, {
                    "basis_vector": j,
                    "row": i,
                    "lhs": str(lhs.rows[i][j]),
                    "rhs": str(rhs.rows[i][j]),
                })
    return Check(law, anchor, True)


def flag_check(law: str, anchor: str, passed: bool, witness: Optional[dict] = None) -> Check:
    return Check(law, anchor, bool(passed), None if passed else (witness or {}))
