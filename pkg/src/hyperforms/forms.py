"""Binary-form classes recorded by root multiplicities, with GIT classification.

A form of degree m is kept only up to coordinate change, so the invariant data
is the multiset of root multiplicities; all strictly semistable forms of even
degree are collapsed to one distinguished semistable-point value.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass


class GitClass(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly_semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class BinaryFormClass:
    """Multiset of root multiplicities, or the distinguished semistable point.

    Roots carry no coordinates: two classes compare equal iff their
    multiplicity multisets agree (the stratum-level notion of equality).
    """

    multiplicities: tuple[int, ...] = ()
    semistable_point: bool = False

    def __post_init__(self):
        mults = tuple(sorted((int(n) for n in self.multiplicities), reverse=True))
        if self.semistable_point:
            if mults:
                raise ValueError("the semistable point carries no roots")
        else:
            if not mults:
                raise ValueError("a form needs at least one root")
            if any(n <= 0 for n in mults):
                raise ValueError("multiplicities must be positive")
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def from_multiplicities(cls, mults) -> "BinaryFormClass":
        return cls(tuple(mults))

    @classmethod
    def semistable(cls) -> "BinaryFormClass":
        return cls(semistable_point=True)

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    @property
    def roots(self) -> tuple[tuple[str, int], ...]:
        """Synthetic labeled roots (labels are fresh opaque tokens)."""
        return tuple((f"p{i}", n) for i, n in enumerate(self.multiplicities))

    def to_dict(self) -> dict:
        if self.semistable_point:
            return {"semistable_point": True}
        return {"multiplicities": list(self.multiplicities)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, doc: dict) -> "BinaryFormClass":
        if doc.get("semistable_point"):
            return cls.semistable()
        return cls.from_multiplicities(doc["multiplicities"])


def classify(f: BinaryFormClass) -> GitClass:
    """GIT class by maximal root multiplicity versus half the degree.

    The semistable-point value classifies strictly semistable by convention.
    """
    if f.semistable_point:
        return GitClass.STRICTLY_SEMISTABLE
    m = f.degree
    top = max(f.multiplicities)
    if 2 * top < m:
        return GitClass.STABLE
    if 2 * top == m:
        return GitClass.STRICTLY_SEMISTABLE
    return GitClass.UNSTABLE


def moduli_dimension(m: int) -> int:
    """Dimension of the moduli of semistable degree-m forms: m - 3."""
    if m < 3:
        raise ValueError(f"degree must be >= 3, got {m}")
    return m - 3
