"""Weighted dual trees of stable marked genus-0 curves.

A curve is recorded by its dual tree: one vertex per component, carrying the
number of marked points on that component, and one edge per node of the curve.
Markings are unordered, so a vertex weight is the only marking data.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property


class InvalidTreeError(ValueError):
    """The input does not describe a weighted tree."""


class UnstableTreeError(ValueError):
    """The operation requires a stable weighted tree."""


CanonicalCode = tuple[int, ...]


@dataclass(frozen=True)
class WeightedTree:
    """Weighted tree: vertices are (id, weight) pairs, edges unordered id pairs.

    Immutable after construction; structural validity (connected, acyclic,
    distinct ids, no loops) is enforced here, stability is not.
    """

    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        verts = tuple(sorted((int(v), int(w)) for v, w in self.vertices))
        ids = [v for v, _ in verts]
        if not ids:
            raise InvalidTreeError("tree has no vertices")
        if len(set(ids)) != len(ids):
            raise InvalidTreeError("vertex ids are not distinct")
        if any(w < 0 for _, w in verts):
            raise InvalidTreeError("negative vertex weight")
        idset = set(ids)
        edges = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.edges))
        for a, b in edges:
            if a == b:
                raise InvalidTreeError(f"self-loop at vertex {a}")
            if a not in idset or b not in idset:
                raise InvalidTreeError(f"edge ({a},{b}) uses unknown vertex")
        if len(set(edges)) != len(edges):
            raise InvalidTreeError("repeated edge")
        if len(edges) != len(verts) - 1:
            raise InvalidTreeError("edge count does not match a tree")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        if len(self._component_of(ids[0])) != len(verts):
            raise InvalidTreeError("graph is disconnected")

    @cached_property
    def weight_of(self) -> dict[int, int]:
        return dict(self.vertices)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v, _ in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    @property
    def m(self) -> int:
        """Total weight: the number of marked points on the curve."""
        return sum(w for _, w in self.vertices)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.vertices)

    def weight(self, v: int) -> int:
        try:
            return self.weight_of[v]
        except KeyError:
            raise InvalidTreeError(f"unknown vertex id {v}") from None

    def degree(self, v: int) -> int:
        self.weight(v)
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.weight(v)
        return self.adjacency[v]

    def _component_of(self, start: int, cut: int | None = None) -> set[int]:
        """Vertices reachable from `start` without passing through `cut`."""
        adj: dict[int, list[int]] = {v: [] for v, _ in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w != cut and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def side_weight(self, edge: tuple[int, int], toward: int) -> int:
        """Total weight of the component on the `toward` side of `edge`."""
        a, b = edge
        if toward == a:
            away = b
        elif toward == b:
            away = a
        else:
            raise InvalidTreeError(f"vertex {toward} not an endpoint of {edge}")
        comp = self._component_of(toward, cut=away)
        return sum(self.weight_of[v] for v in comp)

    # -- serialization ----------------------------------------------------

    @classmethod
    def from_dict(cls, doc: dict) -> "WeightedTree":
        try:
            vertices = tuple((v["id"], v["weight"]) for v in doc["vertices"])
            edges = tuple((a, b) for a, b in doc.get("edges", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTreeError(f"malformed tree document: {exc}") from exc
        tree = cls(vertices, edges)
        if "m" in doc and doc["m"] != tree.m:
            raise InvalidTreeError(
                f"declared m={doc['m']} but weights sum to {tree.m}"
            )
        return tree

    @classmethod
    def from_json(cls, text: str) -> "WeightedTree":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidTreeError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(doc)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "vertices": [{"id": v, "weight": w} for v, w in self.vertices],
            "edges": [[a, b] for a, b in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_dot(self) -> str:
        lines = ["graph tree {"]
        for v, w in self.vertices:
            lines.append(f'  v{v} [label="{v}:{w}"];')
        for a, b in self.edges:
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines)


def tree(weights: dict[int, int], edges=()) -> WeightedTree:
    """Convenience constructor from a weight mapping."""
    return WeightedTree(tuple(weights.items()), tuple(edges))


def path_tree(*weights: int) -> WeightedTree:
    """Path with the given vertex weights, ids 0..n-1 in order."""
    return tree(
        {i: w for i, w in enumerate(weights)},
        [(i, i + 1) for i in range(len(weights) - 1)],
    )


def star_tree(center_weight: int, *leaf_weights: int) -> WeightedTree:
    """Star with center id 0 and leaves 1..k."""
    return tree(
        {0: center_weight, **{i + 1: w for i, w in enumerate(leaf_weights)}},
        [(0, i + 1) for i in range(len(leaf_weights))],
    )


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    violations: tuple[tuple[int, int, int], ...]  # (vertex, weight, degree)


def validate_stable(t: WeightedTree) -> StabilityReport:
    """Check weight + degree >= 3 at every vertex."""
    violations = tuple(
        (v, w, t.degree(v))
        for v, w in t.vertices
        if w + t.degree(v) < 3
    )
    return StabilityReport(stable=not violations, violations=violations)


def require_stable(t: WeightedTree) -> WeightedTree:
    report = validate_stable(t)
    if not report.stable:
        raise UnstableTreeError(
            "tree is not stable; violations at vertices "
            + ", ".join(f"{v} (weight {w}, degree {d})" for v, w, d in report.violations)
        )
    return t


def complementary_subtree_weights(t: WeightedTree, v: int) -> list[int]:
    """Weights of the subtrees hanging off each edge at `v`, sorted."""
    t.weight(v)
    return sorted(t.side_weight((v, u), toward=u) for u in t.neighbors(v))


# -- canonical encoding ---------------------------------------------------

def _tree_centers(t: WeightedTree) -> list[int]:
    """The 1 or 2 structural centers, by iterated leaf removal."""
    deg = {v: t.degree(v) for v in t.ids}
    remaining = set(t.ids)
    leaves = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        next_leaves = []
        for u in leaves:
            remaining.discard(u)
            for w in t.neighbors(u):
                if w in remaining:
                    deg[w] -= 1
                    if deg[w] == 1:
                        next_leaves.append(w)
        leaves = next_leaves
    return sorted(remaining)


def _rooted_code(t: WeightedTree, root: int, parent: int | None) -> tuple:
    children = sorted(
        _rooted_code(t, u, root) for u in t.neighbors(root) if u != parent
    )
    return (t.weight_of[root], tuple(children))


def _flatten(code: tuple, out: list[int]) -> None:
    weight, children = code
    out.append(-1)
    out.append(weight)
    for child in children:
        _flatten(child, out)
    out.append(-2)


def canonical_code(t: WeightedTree) -> CanonicalCode:
    """Integer sequence identifying the weighted tree up to isomorphism.

    AHU-style encoding rooted at the structural center; with two center
    candidates, the lexicographically smaller rooted code wins.  Markers -1/-2
    open and close a subtree, other entries are vertex weights.
    """
    best = min(_rooted_code(t, c, None) for c in _tree_centers(t))
    out: list[int] = []
    _flatten(best, out)
    return tuple(out)


def isomorphic(t1: WeightedTree, t2: WeightedTree) -> bool:
    return canonical_code(t1) == canonical_code(t2)
