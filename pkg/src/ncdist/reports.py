"""Structured outcomes of identity checks.

A failed check carries every offending (word, lhs, rhs) triple so a CI log
points straight at the coefficient that disagrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlphabetMismatchError
from .series import TruncatedSeries, Word


def format_word(w: Word) -> str:
    return ",".join(str(i) for i in w)


def format_value(v) -> str:
    return str(v)


@dataclass(frozen=True)
class Mismatch:
    word: Word
    lhs: object
    rhs: object

    def to_dict(self) -> dict:
        return {"word": format_word(self.word), "lhs": format_value(self.lhs), "rhs": format_value(self.rhs)}


@dataclass
class IdentityReport:
    name: str
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: IdentityReport) -> IdentityReport:
        self.checked += other.checked
        self.mismatches.extend(other.mismatches)
        return self

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.ok,
            "checked": self.checked,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }
        if self.details:
            out["details"] = self.details
        return out

    def __str__(self):
        status = "ok" if self.ok else f"{len(self.mismatches)} mismatches"
        return f"{self.name}: {status} ({self.checked} coefficients checked)"


def compare_series(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, degree: int | None = None) -> IdentityReport:
    """Exact coefficientwise comparison up to ``degree`` (default: the common degree)."""
    if lhs.k != rhs.k:
        raise AlphabetMismatchError(f"{name}: alphabet sizes differ ({lhs.k} vs {rhs.k})")
    top = min(lhs.degree, rhs.degree) if degree is None else degree
    report = IdentityReport(name)
    words = {w for w in lhs.support() if len(w) <= top} | {w for w in rhs.support() if len(w) <= top}
    report.checked = sum(lhs.k**n for n in range(1, top + 1))
    for w in sorted(words, key=lambda w: (len(w), w)):
        a, b = lhs.get(w), rhs.get(w)
        if a != b:
            report.mismatches.append(Mismatch(w, a, b))
    return report

