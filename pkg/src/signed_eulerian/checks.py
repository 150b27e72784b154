"""A single checked instance of an identity, shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

__all__ = ["Check", "violations"]


@dataclass(frozen=True)
class Check:
    """
    One identity instance. ``relation`` is ``"=="`` (``lhs == rhs``) or
    ``"divides"`` (``lhs`` divides ``rhs``).
    """
    identity: str
    n: int
    k: Optional[int]
    lhs: int
    rhs: int
    relation: str = "=="

    @property
    def ok(self) -> bool:
        if self.relation == "==":
            return self.lhs == self.rhs
        if self.relation == "divides":
            return self.rhs % self.lhs == 0
        raise ValueError(f"unknown relation {self.relation!r}")

    def describe(self) -> str:
        where = f"n={self.n}" if self.k is None else f"n={self.n} k={self.k}"
        op = "==" if self.relation == "==" else "|"
        verdict = "PASS" if self.ok else "FAIL"
        return f"{verdict} {self.identity} [{where}]: {self.lhs} {op} {self.rhs}"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "k": self.k,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "relation": self.relation,
            "ok": self.ok,
        }


def violations(checks: Iterable[Check]) -> list[Check]:
    return [c for c in checks if not c.ok]
