"""Rooted planar maps as half-edge rotation systems.

A map on ``H`` half-edges is given by two permutations of ``range(H)``:

* ``sigma`` -- the counterclockwise successor of a half-edge around its vertex;
* ``alpha`` -- the edge involution.  The root is its unique fixed point, a
  dangling half-edge sitting at the root-vertex inside the root-face.

Corners are named by the half-edge that opens them: corner ``h`` is the gap
between ``h`` and ``sigma[h]``.  Faces are orbits of ``sigma o alpha`` on
half-edges, equivalently orbits of ``h -> alpha[sigma[h]]`` on corners.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class MapError(ValueError):
    pass


class InvolutionViolation(MapError):
    pass


class RootViolation(MapError):
    pass


class ConnectivityViolation(MapError):
    pass


class GenusViolation(MapError):
    pass


def cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


@dataclass(frozen=True)
class RootedMap:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    root: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "alpha", tuple(self.alpha))

    @property
    def h(self) -> int:
        return len(self.sigma)

    @property
    def size(self) -> int:
        return (self.h - 1) // 2

    def vertices(self) -> list[list[int]]:
        return cycles(self.sigma)

    def vertex_of(self) -> list[int]:
        vid = [0] * self.h
        for k, cyc in enumerate(self.vertices()):
            for x in cyc:
                vid[x] = k
        return vid

    def faces(self) -> list[list[int]]:
        """Faces as cycles of corners under ``c -> alpha[sigma[c]]``."""
        return cycles([self.alpha[self.sigma[c]] for c in range(self.h)])

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.alpha) if x < y]

    def euler(self) -> tuple[int, int, int]:
        return len(self.vertices()), len(self.edges()), len(self.faces())

    def relabel(self, perm: Sequence[int]) -> "RootedMap":
        """Rename half-edge ``x`` to ``perm[x]``."""
        n = self.h
        sigma = [0] * n
        alpha = [0] * n
        for x in range(n):
            sigma[perm[x]] = perm[self.sigma[x]]
            alpha[perm[x]] = perm[self.alpha[x]]
        return RootedMap(tuple(sigma), tuple(alpha), perm[self.root])

    def to_json(self) -> dict:
        return {"h": self.h, "sigma": list(self.sigma), "alpha": list(self.alpha), "root": self.root}

    @classmethod
    def from_json(cls, d: dict) -> "RootedMap":
        m = cls(tuple(d["sigma"]), tuple(d["alpha"]), d.get("root", 0))
        if "h" in d and d["h"] != m.h:
            raise MapError(f"h={d['h']} but sigma has {m.h} entries")
        return m


SINGLE_VERTEX = RootedMap((0,), (0,), 0)
# root 0 and edge {1, 2}: 0,1 at the root-vertex, 2 alone
LINK = RootedMap((1, 0, 2), (0, 2, 1), 0)
# root 0 and a loop {1, 2} at the only vertex
LOOP = RootedMap((1, 2, 0), (0, 2, 1), 0)


def violations(m: RootedMap) -> list[MapError]:
    """All violated map invariants (empty list means valid)."""
    out: list[MapError] = []
    n = m.h
    if n == 0:
        return [RootViolation("map has no half-edges")]
    for name, perm in (("sigma", m.sigma), ("alpha", m.alpha)):
        if sorted(perm) != list(range(n)):
            out.append(InvolutionViolation(f"{name} is not a permutation of 0..{n - 1}"))
    if out:
        return out
    if any(m.alpha[m.alpha[x]] != x for x in range(n)):
        out.append(InvolutionViolation("alpha is not an involution"))
    fixed = [x for x in range(n) if m.alpha[x] == x]
    if fixed != [m.root]:
        out.append(RootViolation(f"alpha fixed points {fixed}, expected exactly the root {m.root}"))
    if n % 2 == 0:
        out.append(RootViolation(f"H={n} must be odd"))
    if out:
        return out
    if len(_reach(m.sigma, m.alpha, m.root)) != n:
        out.append(ConnectivityViolation("map is not connected"))
        return out
    v, e, f = m.euler()
    if v - e + f != 2:
        out.append(GenusViolation(f"V-E+F = {v}-{e}+{f} = {v - e + f}, expected 2"))
    return out


def validate(m: RootedMap) -> RootedMap:
    errs = violations(m)
    if errs:
        raise errs[0]
    return m


def _reach(sigma, alpha, start) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in (sigma[x], alpha[x]):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------


def canonical_labeling(sigma: Sequence[int], alpha: Sequence[int], root: int) -> list[int]:
    """New label of each half-edge: breadth-first discovery order from the root,
    exploring ``sigma`` before ``alpha``.  Unreached half-edges keep -1."""
    lab = [-1] * len(sigma)
    lab[root] = 0
    order = [root]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for y in (sigma[x], alpha[x]):
            if lab[y] < 0:
                lab[y] = len(order)
                order.append(y)
    return lab


def canonical_form(m: RootedMap) -> tuple:
    lab = canonical_labeling(m.sigma, m.alpha, m.root)
    c = m.relabel(lab)
    return (c.h, c.sigma, c.alpha)


def canonical_map(m: RootedMap) -> RootedMap:
    return m.relabel(canonical_labeling(m.sigma, m.alpha, m.root))


# ---------------------------------------------------------------------------
# Tree-rooted and oriented maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeRootedMap:
    map: RootedMap
    tree: frozenset  # half-edges (both halves) of spanning-tree edges

    def __post_init__(self):
        object.__setattr__(self, "tree", frozenset(self.tree))

    @property
    def size(self) -> int:
        return self.map.size

    def tree_edges(self) -> list[tuple[int, int]]:
        return [e for e in self.map.edges() if e[0] in self.tree]

    def canonical_form(self) -> tuple:
        lab = canonical_labeling(self.map.sigma, self.map.alpha, self.map.root)
        c = self.map.relabel(lab)
        return (c.h, c.sigma, c.alpha, tuple(sorted(lab[x] for x in self.tree)))

    def canonical(self) -> "TreeRootedMap":
        lab = canonical_labeling(self.map.sigma, self.map.alpha, self.map.root)
        return TreeRootedMap(self.map.relabel(lab), frozenset(lab[x] for x in self.tree))

    def to_json(self) -> dict:
        d = self.map.to_json()
        d["tree"] = [list(e) for e in self.tree_edges()]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "TreeRootedMap":
        m = RootedMap.from_json(d)
        tree = frozenset(x for e in d.get("tree", []) for x in e)
        return cls(m, tree)


@dataclass(frozen=True)
class OrientedMap:
    map: RootedMap
    heads: frozenset  # head half-edges, root included

    def __post_init__(self):
        object.__setattr__(self, "heads", frozenset(self.heads))

    @property
    def size(self) -> int:
        return self.map.size

    def is_head(self, h: int) -> bool:
        return h in self.heads

    def check(self) -> None:
        m = self.map
        if m.root not in self.heads:
            raise MapError("root must be a head")
        for x, y in m.edges():
            if (x in self.heads) == (y in self.heads):
                raise MapError(f"edge ({x},{y}) must have exactly one head")

    def canonical_form(self) -> tuple:
        lab = canonical_labeling(self.map.sigma, self.map.alpha, self.map.root)
        c = self.map.relabel(lab)
        return (c.h, c.sigma, c.alpha, tuple(sorted(lab[x] for x in self.heads)))

    def canonical(self) -> "OrientedMap":
        lab = canonical_labeling(self.map.sigma, self.map.alpha, self.map.root)
        return OrientedMap(self.map.relabel(lab), frozenset(lab[x] for x in self.heads))

    def to_json(self) -> dict:
        d = self.map.to_json()
        d["heads"] = sorted(self.heads)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "OrientedMap":
        return cls(RootedMap.from_json(d), frozenset(d["heads"]))


def all_orientations(m: RootedMap) -> Iterator[OrientedMap]:
    edges = m.edges()
    for bits in itertools.product((0, 1), repeat=len(edges)):
        heads = {m.root}
        for (x, y), bit in zip(edges, bits):
            heads.add(y if bit else x)
        yield OrientedMap(m, frozenset(heads))


# ---------------------------------------------------------------------------
# Tour of a spanning tree
# ---------------------------------------------------------------------------

FOLLOW = "follow"
CROSS = "cross"


def tour(mt: TreeRootedMap) -> list[tuple[str, int]]:
    """Counterclockwise tour of the spanning tree from the root.

    Returns one event per non-root half-edge: ``("follow", h)`` for tree
    half-edges, ``("cross", h)`` for the others.
    """
    return tour_events(mt.map.sigma, mt.map.alpha, mt.map.root, mt.tree)


def tour_events(sigma, alpha, root, tree) -> list[tuple[str, int]]:
    events = []
    h = sigma[root]
    budget = len(sigma) + 1
    while h != root:
        if h in tree:
            events.append((FOLLOW, h))
            h = sigma[alpha[h]]
        else:
            events.append((CROSS, h))
            h = sigma[h]
        budget -= 1
        if budget < 0:
            raise MapError("tour does not return to the root")
    return events


# ---------------------------------------------------------------------------
# Spanning trees
# ---------------------------------------------------------------------------


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_spanning_tree(m: RootedMap, tree: Iterable[int]) -> bool:
    """``tree`` is a set of half-edges; both halves of each chosen edge must be present."""
    tree = set(tree)
    if any(m.alpha[x] not in tree or m.alpha[x] == x for x in tree):
        return False
    vid = m.vertex_of()
    nv = max(vid) + 1
    chosen = [(x, m.alpha[x]) for x in tree if x < m.alpha[x]]
    if len(chosen) != nv - 1:
        return False
    parent = list(range(nv))
    for x, y in chosen:
        rx, ry = _find(parent, vid[x]), _find(parent, vid[y])
        if rx == ry:
            return False
        parent[rx] = ry
    return True


def spanning_trees(m: RootedMap) -> Iterator[frozenset]:
    """All spanning trees, as half-edge sets, by brute force over edge subsets."""
    vid = m.vertex_of()
    nv = max(vid) + 1
    edges = m.edges()
    for combo in itertools.combinations(edges, nv - 1):
        parent = list(range(nv))
        ok = True
        for x, y in combo:
            rx, ry = _find(parent, vid[x]), _find(parent, vid[y])
            if rx == ry:
                ok = False
                break
            parent[rx] = ry
        if ok:
            yield frozenset(x for e in combo for x in e)


# ---------------------------------------------------------------------------
# Enumeration by edge insertion
# ---------------------------------------------------------------------------


def _insert_after(sigma: list[int], p: int, x: int) -> None:
    sigma[x] = sigma[p]
    sigma[p] = x


def _grow(m: RootedMap) -> Iterator[RootedMap]:
    n = m.h
    x, y = n, n + 1
    for p in range(n):
        # pendant edge to a new vertex in corner p
        sigma = list(m.sigma) + [0, y]
        _insert_after(sigma, p, x)
        alpha = list(m.alpha) + [y, x]
        yield RootedMap(tuple(sigma), tuple(alpha), m.root)
        # edge between corner p and corner q (same corner gives a loop)
        for q in range(n):
            sigma = list(m.sigma) + [0, 0]
            _insert_after(sigma, p, x)
            _insert_after(sigma, q if q != p else x, y)
            cand = RootedMap(tuple(sigma), tuple(alpha), m.root)
            v, e, f = cand.euler()
            if v - e + f == 2:
                yield cand


def enumerate_maps(n: int) -> list[RootedMap]:
    """All rooted planar maps with ``n`` edges, canonically labelled and sorted.

    Every map with at least one edge has an edge whose removal leaves a
    smaller rooted map (a non-bridge, or a pendant edge away from the root),
    so growing every map of size n-1 in every corner reaches them all.
    """
    level = {canonical_form(SINGLE_VERTEX): SINGLE_VERTEX}
    for _ in range(n):
        nxt = {}
        for m in level.values():
            for g in _grow(m):
                cm = canonical_map(g)
                key = (cm.h, cm.sigma, cm.alpha)
                if key not in nxt:
                    nxt[key] = cm
        level = nxt
    return [level[k] for k in sorted(level)]


def tutte_count(n: int) -> int:
    """Number of rooted planar maps with n edges: 2*3^n*(2n)! / (n!(n+2)!)."""
    from math import factorial

    return 2 * 3**n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def enumerate_tree_rooted_maps(n: int) -> Iterator[TreeRootedMap]:
    for m in enumerate_maps(n):
        for t in spanning_trees(m):
            yield TreeRootedMap(m, t)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)
