"""Admissible double covers of stable (2g+2)-marked trees and their stable models.

The cover of a vertex is a single hyperelliptic component when it carries
branch points, and two disjoint genus-0 sheets when it carries none.  An edge
is ramified in the cover exactly when the subtree weights on its two sides are
odd (both sides, since the total weight is even); otherwise its fiber is a
pair of nodes.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

from .trees import WeightedTree, require_stable

RAMIFIED = "ramified"
SPLIT = "split"


@dataclass(frozen=True)
class CoverComponent:
    id: int
    base_vertex: int
    sheet: int | None  # 0/1 for the sheets over an unbranched vertex, else None
    branch_count: int
    genus: int


@dataclass(frozen=True)
class CoverNode:
    base_edge: tuple[int, int]
    kind: str  # RAMIFIED or SPLIT
    components: tuple[int, int]


@dataclass(frozen=True)
class CoverModel:
    components: tuple[CoverComponent, ...]
    nodes: tuple[CoverNode, ...]
    g: int

    @property
    def arithmetic_genus(self) -> int:
        return (
            sum(c.genus for c in self.components)
            + len(self.nodes)
            - len(self.components)
            + 1
        )

    @cached_property
    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {c.id: [] for c in self.components}
        for node in self.nodes:
            a, b = node.components
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def is_connected(self) -> bool:
        ids = [c.id for c in self.components]
        seen = {ids[0]}
        queue = deque([ids[0]])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(ids)

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "components": [
                {
                    "id": c.id,
                    "base_vertex": c.base_vertex,
                    "sheet": c.sheet,
                    "branch_count": c.branch_count,
                    "genus": c.genus,
                }
                for c in self.components
            ],
            "nodes": [
                {
                    "edge": list(n.base_edge),
                    "kind": n.kind,
                    "components": list(n.components),
                }
                for n in self.nodes
            ],
        }

    def to_dot(self) -> str:
        lines = ["graph cover {"]
        for c in self.components:
            sheet = "" if c.sheet is None else f"[{c.sheet}]"
            lines.append(
                f'  c{c.id} [label="over {c.base_vertex}{sheet} g={c.genus}"];'
            )
        for n in self.nodes:
            a, b = n.components
            style = ' [style=bold]' if n.kind == RAMIFIED else ""
            lines.append(f"  c{a} -- c{b}{style};")
        lines.append("}")
        return "\n".join(lines)


def edge_is_ramified(t: WeightedTree, edge: tuple[int, int]) -> bool:
    """An edge is ramified iff the subtree weight on either side is odd."""
    a, b = edge
    return t.side_weight(edge, toward=a) % 2 == 1


def branch_count(t: WeightedTree, v: int) -> int:
    """Marks on v plus incident ramified edges; always even for even m."""
    return t.weight(v) + sum(
        1 for u in t.neighbors(v) if edge_is_ramified(t, (v, u))
    )


def build_cover(t: WeightedTree) -> CoverModel:
    """Construct the admissible double cover of a stable even-weight tree."""
    require_stable(t)
    m = t.m
    if m % 2:
        raise ValueError(f"total weight must be even, got m={m}")
    g = (m - 2) // 2
    if g < 1:
        raise ValueError(f"need m >= 4, got m={m}")

    components: list[CoverComponent] = []
    over: dict[int, list[int]] = {}  # base vertex -> component ids
    next_id = itertools.count()
    for v in t.ids:
        bc = branch_count(t, v)
        assert bc % 2 == 0, "branch count must be even"
        if bc > 0:
            cid = next(next_id)
            components.append(CoverComponent(cid, v, None, bc, bc // 2 - 1))
            over[v] = [cid]
        else:
            ids = [next(next_id), next(next_id)]
            for sheet, cid in enumerate(ids):
                components.append(CoverComponent(cid, v, sheet, 0, 0))
            over[v] = ids

    # Split nodes over an unbranched vertex go one to each sheet; between two
    # unbranched vertices the sheets are matched index-to-index.
    nodes: list[CoverNode] = []
    for edge in t.edges:
        a, b = edge
        if edge_is_ramified(t, edge):
            assert len(over[a]) == 1 and len(over[b]) == 1
            nodes.append(CoverNode(edge, RAMIFIED, (over[a][0], over[b][0])))
        else:
            for sheet in (0, 1):
                ca = over[a][sheet] if len(over[a]) == 2 else over[a][0]
                cb = over[b][sheet] if len(over[b]) == 2 else over[b][0]
                nodes.append(CoverNode(edge, SPLIT, (ca, cb)))

    cover = CoverModel(tuple(components), tuple(nodes), g)
    assert cover.is_connected(), "admissible double cover must be connected"
    assert cover.arithmetic_genus == g, "arithmetic genus mismatch"
    return cover


@dataclass(frozen=True)
class StableHyperellipticModel:
    """Stable reduction of a cover: components with genera, nodes as id pairs.

    Self-pairs record non-separating nodes.  Node pairs form a multiset.
    """

    components: tuple[tuple[int, int], ...]  # (id, genus)
    nodes: tuple[tuple[int, int], ...]  # sorted pairs, possibly repeated
    g: int

    @property
    def arithmetic_genus(self) -> int:
        return (
            sum(genus for _, genus in self.components)
            + len(self.nodes)
            - len(self.components)
            + 1
        )

    def special_points(self, cid: int) -> int:
        """Node branches on the component; a self-node counts twice."""
        return sum((a == cid) + (b == cid) for a, b in self.nodes)

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "components": [
                {
                    "id": cid,
                    "genus": genus,
                    "special_points": self.special_points(cid),
                }
                for cid, genus in self.components
            ],
            "nodes": [list(pair) for pair in self.nodes],
        }

    def canonical_code(self) -> tuple:
        """Isomorphism invariant: minimal relabeling over genus-preserving maps."""
        genera = [genus for _, genus in self.components]
        order = sorted(range(len(genera)), key=lambda i: genera[i])
        target = tuple(genera[i] for i in order)
        groups: dict[int, list[int]] = {}
        for pos, i in enumerate(order):
            groups.setdefault(genera[i], []).append(pos)
        index_of = {cid: i for i, (cid, _) in enumerate(self.components)}

        best = None
        # All relabelings sending each component to a slot of equal genus.
        group_keys = sorted(groups)
        for perms in itertools.product(
            *(itertools.permutations(groups[k]) for k in group_keys)
        ):
            slot: dict[int, int] = {}
            for k, perm in zip(group_keys, perms):
                members = [i for i in range(len(genera)) if genera[i] == k]
                for i, pos in zip(members, perm):
                    slot[i] = pos
            relabeled = tuple(
                sorted(
                    tuple(sorted((slot[index_of[a]], slot[index_of[b]])))
                    for a, b in self.nodes
                )
            )
            if best is None or relabeled < best:
                best = relabeled
        return (target, best)


def stable_model(c: CoverModel) -> StableHyperellipticModel:
    """Contract genus-0 components meeting the rest of the curve in 2 points.

    The two attachment points are identified into one node; iterated until
    every genus-0 component has at least 3 special points.  Arithmetic genus
    is preserved.
    """
    components = {comp.id: comp.genus for comp in c.components}
    nodes = Counter(tuple(sorted(n.components)) for n in c.nodes)

    def endpoints(cid: int) -> list[tuple[int, int]]:
        out = []
        for (a, b), mult in nodes.items():
            for _ in range(mult):
                if a == cid:
                    out.append((a, b))
                if b == cid:
                    out.append((b, a))
        return out

    changed = True
    while changed:
        changed = False
        for cid, genus in list(components.items()):
            if genus != 0:
                continue
            ends = endpoints(cid)
            # Two attachments, both to other components: contract.
            if len(ends) == 2 and all(other != cid for _, other in ends):
                (_, n1), (_, n2) = ends
                for _, other in ends:
                    nodes[tuple(sorted((cid, other)))] -= 1
                nodes += Counter()  # drop zero entries
                nodes[tuple(sorted((n1, n2)))] += 1
                del components[cid]
                changed = True
                break

    model = StableHyperellipticModel(
        components=tuple(sorted(components.items())),
        nodes=tuple(sorted(nodes.elements())),
        g=c.g,
    )
    assert model.arithmetic_genus == c.g, "contraction changed the genus"
    return model
