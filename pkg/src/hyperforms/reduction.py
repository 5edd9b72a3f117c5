"""Local stable reduction of hyperelliptic equations y^2 = prod (x - x_i)^n_i.

Each root of exponent n >= 3 blows down to a tail with affine equation
y^2 = z^n - 1, attached at one point when n is odd and two when n is even;
exponent 2 leaves only a node, exponent 1 an ordinary branch point.  The
central component keeps one branch point per odd exponent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class ExponentVector:
    """Exponents of the distinct finite roots plus the multiplicity at infinity."""

    exponents: tuple[int, ...]
    at_infinity: int = 0

    def __post_init__(self):
        exps = tuple(int(n) for n in self.exponents)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "at_infinity", int(self.at_infinity))
        if not exps:
            raise ValueError("need at least one finite root")
        if any(n < 1 for n in exps):
            raise ValueError("finite-root exponents must be positive")
        if self.at_infinity < 0:
            raise ValueError("multiplicity at infinity must be non-negative")
        total = self.total
        if total % 2 or total < 6:
            raise ValueError(
                f"exponents must sum to 2g+2 with g >= 2, got sum {total}"
            )

    @property
    def total(self) -> int:
        return sum(self.exponents) + self.at_infinity

    @property
    def g(self) -> int:
        return (self.total - 2) // 2

    def all_multiplicities(self) -> tuple[int, ...]:
        """Finite exponents plus infinity, treated uniformly as roots."""
        mults = self.exponents
        if self.at_infinity:
            mults = mults + (self.at_infinity,)
        return mults

    @classmethod
    def from_dict(cls, doc: dict) -> "ExponentVector":
        return cls(tuple(doc["exponents"]), doc.get("at_infinity", 0))

    def to_dict(self) -> dict:
        return {"at_infinity": self.at_infinity, "exponents": list(self.exponents)}


@dataclass(frozen=True)
class Tail:
    source_index: int  # position in all_multiplicities()
    exponent: int
    genus: int
    attachment_points: int
    equation: str

    def to_dict(self) -> dict:
        return {
            "source_index": self.source_index,
            "exponent": self.exponent,
            "genus": self.genus,
            "attachment_points": self.attachment_points,
            "equation": self.equation,
        }


@dataclass(frozen=True)
class ReductionOutput:
    central_branch_points: int
    central_genus: int
    central_split: bool  # no branch points left: two disjoint genus-0 sheets
    tails: tuple[Tail, ...]
    extra_nodes: int  # nodes left by contracted exponent-2 tails
    g: int
    git_unstable_input: bool

    @property
    def component_count(self) -> int:
        return (2 if self.central_split else 1) + len(self.tails)

    @property
    def node_count(self) -> int:
        return sum(t.attachment_points for t in self.tails) + self.extra_nodes

    @property
    def arithmetic_genus(self) -> int:
        central = 0 if self.central_split else self.central_genus
        return (
            central
            + sum(t.genus for t in self.tails)
            + self.node_count
            - self.component_count
            + 1
        )

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "central": {
                "branch_points": self.central_branch_points,
                "genus": self.central_genus,
                "split": self.central_split,
            },
            "tails": [t.to_dict() for t in self.tails],
            "extra_nodes": self.extra_nodes,
            "arithmetic_genus": self.arithmetic_genus,
            "git_unstable_input": self.git_unstable_input,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def tail_genus(n: int) -> int:
    return (n - 1) // 2


def attachment_points(n: int) -> int:
    return 2 - (n % 2)


def reduce(e: ExponentVector) -> ReductionOutput:
    """Closed-form local stable reduction of the hyperelliptic equation.

    Exponents above 2g are rejected (no central component remains); exponents
    in (g+1, 2g] describe GIT-unstable forms and are computed but flagged.
    """
    g = e.g
    mults = e.all_multiplicities()
    top = max(mults)
    if top > 2 * g:
        raise ValueError(
            f"exponent {top} exceeds 2g = {2 * g}; no central component exists"
        )

    tails: list[Tail] = []
    extra_nodes = 0
    branch_points = 0
    for idx, n in enumerate(mults):
        if n == 1:
            branch_points += 1
        elif n == 2:
            extra_nodes += 1
        else:
            if n % 2:
                branch_points += 1
            tails.append(
                Tail(
                    source_index=idx,
                    exponent=n,
                    genus=tail_genus(n),
                    attachment_points=attachment_points(n),
                    equation=f"y^2 = z^{n} - 1",
                )
            )

    assert branch_points % 2 == 0, "central branch-point count must be even"
    split = branch_points == 0
    central_genus = 0 if split else branch_points // 2 - 1
    out = ReductionOutput(
        central_branch_points=branch_points,
        central_genus=central_genus,
        central_split=split,
        tails=tuple(tails),
        extra_nodes=extra_nodes,
        g=g,
        git_unstable_input=top > g + 1,
    )
    assert out.arithmetic_genus == g, "stable reduction changed the genus"
    return out


@dataclass(frozen=True)
class BlowupChain:
    """Multiplicities of the exceptional chain from repeated blow-up at a root."""

    n: int
    multiplicities: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "multiplicities": list(self.multiplicities)}


def blowup_chain(n: int) -> BlowupChain:
    """Exceptional multiplicities before the first normalized base change.

    n = 2i gives (2, 4, ..., 2i); n = 2i+1 gives (2, 4, ..., 2i, 2i+1, 4i+2).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    i = n // 2
    chain = [2 * j for j in range(1, i + 1)]
    if n % 2:
        chain += [2 * i + 1, 4 * i + 2]
    return BlowupChain(n, tuple(chain))
