"""Shared brute-force oracles for the property suites."""

from __future__ import annotations

from itertools import permutations

from hyperforms import WeightedTree, build_cover, find_central
from hyperforms.trees import tree


def brute_isomorphic(t1: WeightedTree, t2: WeightedTree) -> bool:
    """Weighted-tree isomorphism by trying every vertex bijection."""
    if len(t1.ids) != len(t2.ids):
        return False
    if sorted(w for _, w in t1.vertices) != sorted(w for _, w in t2.vertices):
        return False
    edges1 = set(t1.edges)
    for perm in permutations(t2.ids):
        mapping = dict(zip(t1.ids, perm))
        if any(t1.weight(v) != t2.weight(mapping[v]) for v in t1.ids):
            continue
        mapped = {tuple(sorted((mapping[a], mapping[b]))) for a, b in edges1}
        if mapped == set(t2.edges):
            return True
    return False


def leaf_strip_cover(t: WeightedTree):
    """Iterative leaf-stripping construction of the double cover data.

    Strips one leaf at a time; a leaf with odd current weight is ramified over
    its node and passes one extra mark to its neighbour.  Returns the set of
    ramified edges and the branch count of every vertex.
    """
    weights = dict(t.weight_of)
    adj = {v: set(t.neighbors(v)) for v in t.ids}
    remaining = set(t.ids)
    ramified: set[tuple[int, int]] = set()
    branch: dict[int, int] = {}
    while len(remaining) > 1:
        v = min(u for u in remaining if len(adj[u]) == 1)
        (u,) = adj[v]
        if weights[v] % 2:
            ramified.add(tuple(sorted((v, u))))
            branch[v] = weights[v] + 1
            weights[u] += 1
        else:
            branch[v] = weights[v]
        adj[u].discard(v)
        adj[v] = set()
        remaining.discard(v)
    last = next(iter(remaining))
    branch[last] = weights[last]
    return ramified, branch


def subcover_genus(t: WeightedTree, central_vertex: int, branch_root: int) -> int:
    """Arithmetic genus of the part of the double cover over one branch."""
    cover = build_cover(t)
    sub_vertices = t._component_of(branch_root, cut=central_vertex)
    comps = [c for c in cover.components if c.base_vertex in sub_vertices]
    ids = {c.id for c in comps}
    internal = [
        n for n in cover.nodes if n.components[0] in ids and n.components[1] in ids
    ]
    # The subcover must be connected for the genus formula below.
    reach = {comps[0].id}
    frontier = [comps[0].id]
    while frontier:
        x = frontier.pop()
        for n in internal:
            a, b = n.components
            for y in (a, b):
                if x in (a, b) and y not in reach:
                    reach.add(y)
                    frontier.append(y)
    assert reach == ids, "branch subcover is disconnected"
    return sum(c.genus for c in comps) + len(internal) - len(comps) + 1


def reconstructed_exponents(t: WeightedTree):
    """Exponents recovered from the cover tails: 2h+1 odd weight, 2h+2 even."""
    result = find_central(t)
    if result.is_semistable_edge:
        return None
    v = result.vertex
    mults = [1] * t.weight(v)
    for u in t.neighbors(v):
        h = subcover_genus(t, v, u)
        w = t.side_weight((v, u), toward=u)
        mults.append(2 * h + 1 if w % 2 else 2 * h + 2)
    return sorted(mults, reverse=True)


def two_vertex_tree(j: int, m: int) -> WeightedTree:
    return tree({0: j, 1: m - j}, [(0, 1)])
