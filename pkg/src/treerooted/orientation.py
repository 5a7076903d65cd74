"""Tree-orientations: spanning tree -> orientation (delta) and back (gamma)."""

from __future__ import annotations

from .planar_map import (
    FOLLOW,
    OrientedMap,
    RootedMap,
    TreeRootedMap,
    inverse,
    spanning_trees,
    tour,
)


class NonTreeOrientation(ValueError):
    pass


def delta(mt: TreeRootedMap) -> OrientedMap:
    """Orient tree edges away from the root and every other edge so that its
    head is met before its tail during the tour."""
    heads = {mt.map.root}
    seen = set()
    alpha = mt.map.alpha
    for kind, h in tour(mt):
        if alpha[h] in seen:
            # second half-edge met: a tree edge's child side, never a crossing head
            if kind == FOLLOW:
                heads.add(h)
        elif kind != FOLLOW:
            heads.add(h)
        seen.add(h)
    return OrientedMap(mt.map, frozenset(heads))


def gamma(om: OrientedMap) -> TreeRootedMap:
    """Recover the spanning tree by the tour automaton.

    Starting from the root alone, tour the current tree; whenever a tail is
    met whose head has not been met yet, its edge joins the tree.  Raises
    ``NonTreeOrientation`` when the result would not be a spanning tree.
    """
    m = om.map
    sigma, alpha = m.sigma, m.alpha
    vid = m.vertex_of()
    in_tree_vertex = {vid[m.root]}
    tree: set[int] = set()
    met: set[int] = set()
    h = sigma[m.root]
    budget = 2 * m.h
    while h != m.root:
        budget -= 1
        if budget < 0:
            raise NonTreeOrientation("tour did not return to the root within 2H steps")
        met.add(h)
        if h not in tree and h not in om.heads and alpha[h] not in met:
            end = vid[alpha[h]]
            if end in in_tree_vertex:
                raise NonTreeOrientation(f"adding edge at tail {h} would close a cycle")
            tree.update((h, alpha[h]))
            in_tree_vertex.add(end)
        h = sigma[alpha[h]] if h in tree else sigma[h]
    if len(in_tree_vertex) != len(m.vertices()):
        raise NonTreeOrientation("recovered tree is not spanning")
    return TreeRootedMap(m, frozenset(tree))


# ---------------------------------------------------------------------------
# Positive cycles
# ---------------------------------------------------------------------------


def _directed_edges(om: OrientedMap) -> list[tuple[int, int]]:
    """(tail, head) half-edge pairs."""
    return [(x, y) if y in om.heads else (y, x) for x, y in om.map.edges()]


def simple_directed_cycles(om: OrientedMap) -> list[tuple[tuple[int, int], ...]]:
    """Every simple directed cycle as a tuple of (tail, head) half-edge pairs,
    listed once, starting from its smallest vertex."""
    vid = om.map.vertex_of()
    out_edges: dict[int, list[tuple[int, int]]] = {}
    for t, hd in _directed_edges(om):
        out_edges.setdefault(vid[t], []).append((t, hd))
    result = []
    nv = max(vid) + 1
    for s in range(nv):
        path: list[tuple[int, int]] = []
        on_path = {s}

        def dfs(v):
            for t, hd in out_edges.get(v, ()):
                u = vid[hd]
                if u == s:
                    result.append(tuple(path + [(t, hd)]))
                elif u > s and u not in on_path:
                    on_path.add(u)
                    path.append((t, hd))
                    dfs(u)
                    path.pop()
                    on_path.discard(u)

        dfs(s)
    return result


def interior(om: OrientedMap, cycle) -> set[int]:
    """Half-edges strictly on the left of a simple directed cycle.

    At each cycle vertex the left side is the run of half-edges met turning
    counterclockwise from the outgoing tail to the incoming head; the region
    is then closed under ``sigma`` and ``alpha`` without crossing the cycle.
    """
    m = om.map
    sigma, alpha = m.sigma, m.alpha
    sinv = inverse(sigma)
    on_cycle = {x for e in cycle for x in e}
    seeds = []
    k = len(cycle)
    for i in range(k):
        h_in = cycle[i][1]
        h_out = cycle[(i + 1) % k][0]
        x = sigma[h_out]
        while x != h_in:
            seeds.append(x)
            x = sigma[x]
    region = set(seeds)
    todo = list(seeds)
    while todo:
        x = todo.pop()
        for y in (sigma[x], sinv[x], alpha[x]):
            if y not in on_cycle and y not in region:
                region.add(y)
                todo.append(y)
    return region


def positive_cycles(om: OrientedMap) -> list[tuple[tuple[int, int], ...]]:
    """Directed simple cycles with the root outside their left region."""
    return [c for c in simple_directed_cycles(om) if om.map.root not in interior(om, c)]


def all_reachable(om: OrientedMap) -> bool:
    m = om.map
    vid = m.vertex_of()
    adj: dict[int, list[int]] = {}
    for t, hd in _directed_edges(om):
        adj.setdefault(vid[t], []).append(vid[hd])
    seen = {vid[m.root]}
    todo = [vid[m.root]]
    while todo:
        v = todo.pop()
        for u in adj.get(v, ()):
            if u not in seen:
                seen.add(u)
                todo.append(u)
    return len(seen) == len(m.vertices())


def is_tree_orientation(om: OrientedMap) -> bool:
    return all_reachable(om) and not positive_cycles(om)


def is_tree_orientation_oracle(om: OrientedMap) -> bool:
    """Brute force: some spanning tree is sent onto ``om`` by delta."""
    for t in spanning_trees(om.map):
        if delta(TreeRootedMap(om.map, t)).heads == om.heads:
            return True
    return False


def tree_orientations(m: RootedMap):
    from .planar_map import all_orientations

    return [om for om in all_orientations(m) if is_tree_orientation(om)]
