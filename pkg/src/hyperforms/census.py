"""Exhaustive enumeration of stable weighted-tree classes of a given total weight.

Two independent generators back the census: the production one walks
non-isomorphic tree shapes and fills in weights, the brute-force one runs over
all labeled trees via Pruefer sequences.  Both deduplicate by canonical code
and must agree exactly; the test suite enforces this.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

import networkx as nx

from .strata import classify_stratum
from .trees import CanonicalCode, WeightedTree, canonical_code, tree, validate_stable

DEFAULT_BOUND = 10


@dataclass(frozen=True)
class Census:
    """All stable weighted-tree classes of total weight m, in code order."""

    m: int
    classes: tuple[tuple[CanonicalCode, WeightedTree], ...]
    stratum_counts: tuple[tuple[str, int], ...]

    def __len__(self) -> int:
        return len(self.classes)

    @property
    def trees(self) -> tuple[WeightedTree, ...]:
        return tuple(t for _, t in self.classes)

    @property
    def codes(self) -> tuple[CanonicalCode, ...]:
        return tuple(code for code, _ in self.classes)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "count": len(self.classes),
            "classes": [t.to_dict() for t in self.trees],
            "stratum_counts": dict(self.stratum_counts),
        }


def max_vertices(m: int) -> int:
    """Stability bounds the vertex count by m - 2: leaves weigh >= 2,
    degree-2 vertices >= 1, and degree >= 3 vertices number at most
    (leaves - 2)."""
    return max(1, m - 2)


def _weightings(lower_bounds: list[int], total: int):
    """All weight vectors >= the per-vertex lower bounds summing to total."""
    slack = total - sum(lower_bounds)
    if slack < 0:
        return
    n = len(lower_bounds)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == n - 1:
            yield acc + [lower_bounds[i] + remaining]
            return
        for extra in range(remaining + 1):
            yield from rec(i + 1, remaining - extra, acc + [lower_bounds[i] + extra])

    yield from rec(0, slack, [])


def _tree_shapes(n: int):
    """Edge lists of all non-isomorphic trees on n vertices, ids 0..n-1."""
    if n == 1:
        yield []
        return
    for shape in nx.nonisomorphic_trees(n):
        yield list(shape.edges())


def _collect(candidates) -> dict[CanonicalCode, WeightedTree]:
    classes: dict[CanonicalCode, WeightedTree] = {}
    for t in candidates:
        if not validate_stable(t).stable:
            continue
        code = canonical_code(t)
        if code not in classes:
            classes[code] = t
    return classes


def _structured_classes(m: int) -> dict[CanonicalCode, WeightedTree]:
    def candidates():
        for n in range(1, max_vertices(m) + 1):
            for edges in _tree_shapes(n):
                degree = Counter()
                for a, b in edges:
                    degree[a] += 1
                    degree[b] += 1
                bounds = [max(0, 3 - degree[v]) for v in range(n)]
                for weights in _weightings(bounds, m):
                    yield tree(dict(enumerate(weights)), edges)

    return _collect(candidates())


def _prufer_classes(m: int) -> dict[CanonicalCode, WeightedTree]:
    """Independent oracle: labeled trees from Pruefer sequences, all weightings."""

    def candidates():
        for n in range(1, max_vertices(m) + 1):
            if n == 1:
                shapes = [[]]
            elif n == 2:
                shapes = [[(0, 1)]]
            else:
                shapes = []
                for seq in product(range(n), repeat=n - 2):
                    shape = nx.from_prufer_sequence(list(seq))
                    shapes.append(list(shape.edges()))
            for edges in shapes:
                degree = Counter()
                for a, b in edges:
                    degree[a] += 1
                    degree[b] += 1
                bounds = [max(0, 3 - degree[v]) for v in range(n)]
                for weights in _weightings(bounds, m):
                    yield tree(dict(enumerate(weights)), edges)

    return _collect(candidates())


def _make_census(m: int, classes: dict[CanonicalCode, WeightedTree]) -> Census:
    ordered = tuple(sorted(classes.items()))
    if m % 2 == 0 and m >= 4:
        counts = Counter(str(classify_stratum(t)) for _, t in ordered)
        stratum_counts = tuple(sorted(counts.items()))
    else:
        stratum_counts = ()
    return Census(m=m, classes=ordered, stratum_counts=stratum_counts)


def enumerate_stable_trees(m: int, bound: int = DEFAULT_BOUND) -> Census:
    """Census of all stable weighted-tree classes of total weight m."""
    if not 3 <= m <= bound:
        raise ValueError(f"m must satisfy 3 <= m <= {bound}, got {m}")
    return _make_census(m, _structured_classes(m))


def brute_force_census(m: int, bound: int = 8) -> Census:
    """Same census via the Pruefer-sequence generator; test oracle only."""
    if not 3 <= m <= bound:
        raise ValueError(f"m must satisfy 3 <= m <= {bound}, got {m}")
    return _make_census(m, _prufer_classes(m))
