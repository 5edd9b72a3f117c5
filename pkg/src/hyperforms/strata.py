"""Boundary strata of the stable hyperelliptic moduli and the map to forms.

Two-vertex trees are the divisorial strata: smaller weight j odd gives a
delta stratum, j even a xi stratum, and j = g+1 lands on the semistable
point.  Deeper strata (three or more vertices) only get their codimension.
"""

from __future__ import annotations

from dataclasses import dataclass

from .central import contract_F_m
from .forms import BinaryFormClass
from .trees import WeightedTree, require_stable

INTERIOR = "interior"
DELTA = "delta"
XI = "xi"
DEEPER = "deeper"
SEMISTABLE_IMAGE = "semistable_image"


@dataclass(frozen=True)
class StratumLabel:
    kind: str
    index: int | None = None  # i for delta/xi
    codimension: int | None = None  # edge count for deeper strata
    underlying: "StratumLabel | None" = None  # divisor hit by a semistable image

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.index is not None:
            doc["index"] = self.index
        if self.codimension is not None:
            doc["codimension"] = self.codimension
        if self.underlying is not None:
            doc["underlying"] = self.underlying.to_dict()
        return doc

    def __str__(self) -> str:
        if self.kind == DELTA:
            return f"delta_{self.index}"
        if self.kind == XI:
            return f"xi_{self.index}"
        if self.kind == DEEPER:
            return f"deeper_codim_{self.codimension}"
        if self.kind == SEMISTABLE_IMAGE:
            return f"semistable({self.underlying})"
        return self.kind


def interior() -> StratumLabel:
    return StratumLabel(INTERIOR)


def delta(i: int, g: int) -> StratumLabel:
    if not 1 <= i <= g // 2:
        raise ValueError(f"delta index must satisfy 1 <= i <= {g // 2}, got {i}")
    return StratumLabel(DELTA, index=i)


def xi(i: int, g: int) -> StratumLabel:
    if not 0 <= i <= (g - 1) // 2:
        raise ValueError(f"xi index must satisfy 0 <= i <= {(g - 1) // 2}, got {i}")
    return StratumLabel(XI, index=i)


def _require_even(t: WeightedTree) -> int:
    require_stable(t)
    m = t.m
    if m % 2:
        raise ValueError(f"total weight must be even, got m={m}")
    if m < 4:
        raise ValueError(f"need m = 2g+2 with g >= 1, got m={m}")
    return (m - 2) // 2


def classify_stratum(t: WeightedTree, *, min_genus: int = 1) -> StratumLabel:
    """Boundary stratum of the stable tree inside the hyperelliptic moduli."""
    require_stable(t)
    m = t.m
    if m % 2:
        raise ValueError(f"total weight must be even, got m={m}")
    g = (m - 2) // 2
    if g < min_genus:
        raise ValueError(f"need g >= {min_genus}, got g={g}")
    if len(t.ids) == 1:
        return interior()
    if len(t.ids) > 2:
        return StratumLabel(DEEPER, codimension=len(t.edges))
    (_, w1), (_, w2) = t.vertices
    j = min(w1, w2)
    # Unordered marks identify weight splits (j, m-j) and (m-j, j).
    label = delta((j - 1) // 2, g) if j % 2 else xi((j - 2) // 2, g)
    if j == g + 1:
        return StratumLabel(SEMISTABLE_IMAGE, underlying=label)
    return label


def f_g_exponents(t: WeightedTree) -> BinaryFormClass:
    """Image of the stable hyperelliptic curve as a binary-form class.

    The exponent of a contracted branch is its subtree weight; equivalently
    2h+1 for a tail of genus h attached at one point, 2h+2 at two points.
    """
    _require_even(t)
    return contract_F_m(t)


def image_dimension(label: StratumLabel, g: int) -> int:
    """Dimension of the image of the stratum under the map to binary forms."""
    if g < 2:
        raise ValueError(f"need g >= 2, got {g}")
    if label.kind == INTERIOR:
        return 2 * g - 1
    if label.kind == SEMISTABLE_IMAGE:
        return 0
    if label.kind == DELTA:
        return 2 * g - 2 * label.index - 1
    if label.kind == XI:
        return 2 * g - 2 * label.index - 2
    raise ValueError(f"no dimension formula for stratum kind '{label.kind}'")
