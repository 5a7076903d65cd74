"""Prefix-maps and the structures grown from them, used to check the
isomorphism between the explosion route and the leaf/tree-code route one
letter at a time.

A prefix-map is the partial tree-oriented map of a prefix-shuffle: the
spanning tree of its a-completion, with heads for unmatched ``b`` left
dangling and the edges of unmatched ``a`` marked active.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalan import PlaneTree, leaves, theta_with_leaves
from .cdv import TreeSequence, lambda0, lambda1
from .explosion import explode, tree_rotation, tree_tour
from .planar_map import OrientedMap, RootedMap, canonical_labeling, cycles, inverse, tour_events
from .words import plus_completion, require_prefix_shuffle, subword_a


# ---------------------------------------------------------------------------
# Prefix-maps
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrefixMap:
    sigma: tuple[int, ...]
    alpha: tuple[int, ...]
    root: int
    heads: frozenset
    tree: frozenset
    active: tuple[tuple[int, int], ...]  # (tail, head) along the path from the root
    dangling: tuple[int, ...]

    @property
    def rooting_heads(self) -> tuple[int, ...]:
        return (self.root,) + tuple(h for _, h in self.active)

    def vertex_of(self) -> list[int]:
        vid = [0] * len(self.sigma)
        for k, cyc in enumerate(cycles(self.sigma)):
            for x in cyc:
                vid[x] = k
        return vid

    def corner(self) -> int:
        """The corner where the next letter acts: just before the last rooting head."""
        return inverse(self.sigma)[self.rooting_heads[-1]]

    def appearance(self) -> dict[int, int]:
        """Rank of each half-edge by the first time the tour around the
        spanning tree meets its edge; the root ranks first."""
        rank = {self.root: -1}
        for i, (_, h) in enumerate(tour_events(self.sigma, self.alpha, self.root, self.tree)):
            rank.setdefault(h, i)
            rank.setdefault(self.alpha[h], i)
        return rank

    def canonical_form(self) -> tuple:
        lab = canonical_labeling(self.sigma, self.alpha, self.root)
        n = len(self.sigma)
        sig = [0] * n
        alp = [0] * n
        for x in range(n):
            sig[lab[x]] = lab[self.sigma[x]]
            alp[lab[x]] = lab[self.alpha[x]]
        return (
            tuple(sig),
            tuple(alp),
            tuple(sorted(lab[x] for x in self.heads)),
            tuple(sorted(lab[x] for x in self.tree)),
            tuple((lab[t], lab[h]) for t, h in self.active),
            tuple(lab[x] for x in self.dangling),
        )

    def oriented_map(self) -> OrientedMap:
        """The underlying tree-oriented map; only valid without dangling heads."""
        if self.dangling:
            raise ValueError("prefix-map still has dangling heads")
        return OrientedMap(RootedMap(self.sigma, self.alpha, self.root), self.heads)


def build_prefix_map(w: str) -> PrefixMap:
    """Grow the spanning tree of the a-completion of ``w`` first, then walk
    around it reading ``w`` and insert a head for each ``b`` and a tail for
    each ``B`` in the corner reached."""
    require_prefix_shuffle(w)
    alpha, tree_heads, rot = tree_rotation(PlaneTree(subword_a(plus_completion(w))))
    sigma = [0] * len(alpha)
    for r in rot:
        for x, y in zip(r, r[1:] + r[:1]):
            sigma[x] = y
    heads = set(tree_heads)
    tree = set(range(1, len(alpha)))
    a_edges = iter([(x, x + 1) for x in range(1, len(alpha), 2)])
    cur = 0
    a_stack: list[tuple[int, int]] = []
    b_stack: list[int] = []
    for c in w:
        if c in "aA":
            nxt = sigma[cur]
            if c == "a":
                e = next(a_edges)
                assert nxt == e[0], "tour out of step with the a-completion tree"
                a_stack.append(e)
            else:
                e = a_stack.pop()
                assert nxt == e[1], "tour out of step with the a-completion tree"
            cur = alpha[nxt]
            continue
        z = len(sigma)
        sigma.append(sigma[cur])
        sigma[cur] = z
        if c == "b":
            alpha.append(z)
            heads.add(z)
            b_stack.append(z)
        else:
            o = b_stack.pop()
            alpha.append(o)
            alpha[o] = z
        cur = z
    return PrefixMap(tuple(sigma), tuple(alpha), 0, frozenset(heads), frozenset(tree),
                     tuple(a_stack), tuple(b_stack))


def evolve_prefix_map(pm: PrefixMap, c: str) -> PrefixMap:
    """Apply one letter by the local rule: a new active edge, a new dangling
    head, inactivation of the last active edge, or a tail joined to the last
    dangling head, always in the corner just before the last rooting head."""
    sigma = list(pm.sigma)
    alpha = list(pm.alpha)
    heads = set(pm.heads)
    tree = set(pm.tree)
    active = list(pm.active)
    dangling = list(pm.dangling)
    p = pm.corner()

    def insert():
        z = len(sigma)
        sigma.append(sigma[p])
        sigma[p] = z
        alpha.append(z)
        return z

    if c == "a":
        x = insert()
        y = len(sigma)
        sigma.append(y)
        alpha.append(x)
        alpha[x] = y
        heads.add(y)
        tree.update((x, y))
        active.append((x, y))
    elif c == "b":
        z = insert()
        heads.add(z)
        dangling.append(z)
    elif c == "A":
        active.pop()
    else:
        z = insert()
        o = dangling.pop()
        alpha[z], alpha[o] = o, z
    return PrefixMap(tuple(sigma), tuple(alpha), pm.root, frozenset(heads), frozenset(tree),
                     tuple(active), tuple(dangling))


def evolution_check(w: str, c: str) -> bool:
    return evolve_prefix_map(build_prefix_map(w), c).canonical_form() == build_prefix_map(w + c).canonical_form()


# ---------------------------------------------------------------------------
# Prefix-forests
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrefixForest:
    dangling_trees: tuple[PlaneTree, ...]  # rooted on dangling heads, appearance order
    rooting_trees: tuple[PlaneTree, ...]  # rooted on rooting heads, root first

    def as_sequence(self) -> TreeSequence:
        k, l = len(self.dangling_trees), len(self.rooting_trees)
        return TreeSequence("u" * (k + 1) + "v" * l, self.dangling_trees + self.rooting_trees[::-1])


def prefix_forest(pm: PrefixMap) -> PrefixForest:
    """Delete the tails of active edges, explode, and read each tree from its root head."""
    cut = frozenset(t for t, _ in pm.active)
    alpha = list(pm.alpha)
    for _, h in pm.active:
        alpha[h] = h
    sigma2 = explode(pm.sigma, alpha, pm.heads, skip=cut)
    pos = pm.appearance()
    dangling = sorted(pm.dangling, key=pos.__getitem__)
    rooting = [pm.root] + sorted((h for _, h in pm.active), key=pos.__getitem__)
    total = 0

    def grow(r):
        nonlocal total
        word, order = tree_tour(sigma2, alpha, r, pm.heads)
        total += len(order)
        return PlaneTree(word)

    forest = PrefixForest(tuple(grow(h) for h in dangling), tuple(grow(h) for h in rooting))
    if total != len(pm.heads):
        raise AssertionError("exploded prefix-map is not a forest rooted on its root heads")
    return forest


def check_prop_lambda0(w: str) -> bool:
    return prefix_forest(build_prefix_map(w)).as_sequence() == lambda0(w)


# ---------------------------------------------------------------------------
# Tagged trees: partition-trees and theta of the tree-code
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TaggedTree:
    """Plane tree with a colour per vertex ('W'/'B', preorder) and two ordered
    lists of active vertices (preorder indices)."""

    tree: PlaneTree
    colors: str
    white_order: tuple[int, ...]
    black_order: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.tree.word}|{self.colors}|{','.join(map(str, self.white_order))}|{','.join(map(str, self.black_order))}"

    def children(self) -> list[list[int]]:
        kids: list[list[int]] = [[] for _ in range(self.tree.num_vertices)]
        for v, p in enumerate(self.tree.parents()):
            if p >= 0:
                kids[p].append(v)
        return kids

    def add_leaf(self, parent: int, first: bool, color: str) -> tuple["TaggedTree", int, list[int]]:
        """New leaf as first or last child of ``parent``; returns the new tree,
        the leaf's index and the old-to-new index map."""
        kids = self.children()
        new = len(kids)
        kids.append([])
        if first:
            kids[parent].insert(0, new)
        else:
            kids[parent].append(new)
        colors = list(self.colors) + [color]
        order: list[int] = []
        word: list[str] = []

        def rec(v):
            order.append(v)
            for u in kids[v]:
                word.append("a")
                rec(u)
                word.append("A")

        rec(0)
        relabel = [0] * len(order)
        for i, v in enumerate(order):
            relabel[v] = i
        t = TaggedTree(
            PlaneTree("".join(word)),
            "".join(colors[v] for v in order),
            tuple(relabel[v] for v in self.white_order),
            tuple(relabel[v] for v in self.black_order),
        )
        return t, relabel[new], relabel


def partition_tree(w: str) -> TaggedTree:
    """Dual tree of the exploded prefix-map with vertex cells kept.

    Every head gives one edge between the cell of its vertex (black) and the
    face holding the corner just after it (white).  In the root-face the
    white end is split into v0, v1, ..., vk, one per dangling head, by
    position along the root-face border.
    """
    pm = build_prefix_map(w)
    sigma, alpha = pm.sigma, pm.alpha
    vid = pm.vertex_of()
    step = [alpha[sigma[c]] for c in range(len(sigma))]
    face_of = [0] * len(sigma)
    for k, cyc in enumerate(cycles(step)):
        for c in cyc:
            face_of[c] = k
    rf = face_of[pm.root]
    walk = [pm.root]
    while step[walk[-1]] != pm.root:
        walk.append(step[walk[-1]])
    wpos = {c: i for i, c in enumerate(walk)}
    dangling = sorted(pm.dangling, key=wpos.__getitem__)
    dpos = [wpos[h] for h in dangling]

    def white_end(h):
        if face_of[h] != rf:
            return ("W", face_of[h])
        return ("V", sum(1 for q in dpos if q <= wpos[h]))

    # ccw cyclic order of incident edges (named by their head) at each node
    around: dict[tuple, list[int]] = {}
    for cyc in cycles(sigma):
        hs = [x for x in cyc if x in pm.heads]
        around[("B", vid[cyc[0]])] = hs
    for k, cyc in enumerate(cycles(step)):
        if k != rf:
            around[("W", k)] = [c for c in reversed(cyc) if c in pm.heads]
    for i in range(len(dangling) + 1):
        around[("V", i)] = []
    for c in reversed(walk):
        if c in pm.heads:
            around[white_end(c)].append(c)
    ends = {h: (("B", vid[h]), white_end(h)) for h in pm.heads}

    nodes: list[tuple] = []
    word: list[str] = []

    def visit(node, via):
        nodes.append(node)
        ring = around[node]
        k = ring.index(via) if via is not None else -1
        for h in ring[k + 1 :] + ring[: k + 1]:
            if h == via:
                continue
            a, b = ends[h]
            word.append("a")
            visit(b if a == node else a, h)
            word.append("A")

    v0 = ("V", 0)
    if around[v0][-1] != pm.root:
        raise AssertionError("root edge is not last around the exterior vertex")
    # the tree is rooted just after the root edge, so start the ring there
    nodes.append(v0)
    for h in around[v0]:
        word.append("a")
        visit(ends[h][0], h)
        word.append("A")
    if len(nodes) != len(around) or len(set(nodes)) != len(nodes):
        raise AssertionError(f"partition-tree of {w!r} is not a tree")
    index = {nd: i for i, nd in enumerate(nodes)}
    pos = pm.appearance()
    rooting = [pm.root] + sorted((h for _, h in pm.active), key=pos.__getitem__)
    return TaggedTree(
        PlaneTree("".join(word)),
        "".join("B" if nd[0] == "B" else "W" for nd in nodes),
        tuple(index[("V", i)] for i in range(len(dangling) + 1)),
        tuple(index[("B", vid[h])] for h in rooting),
    )


def root_face_dangling_order(w: str) -> tuple[int, ...]:
    pm = build_prefix_map(w)
    step = [pm.alpha[pm.sigma[c]] for c in range(len(pm.sigma))]
    walk = [pm.root]
    while step[walk[-1]] != pm.root:
        walk.append(step[walk[-1]])
    return tuple(c for c in walk if c in set(pm.dangling))


def tour_dangling_order(w: str) -> tuple[int, ...]:
    pm = build_prefix_map(w)
    return tuple(sorted(pm.dangling, key=pm.appearance().__getitem__))


def _theta_lambda1(w: str) -> tuple[PlaneTree, str, list[int], list[int]]:
    b = lambda1(w)
    t, leaf_vertex = theta_with_leaves(b)
    lv = leaves(b)
    if sorted(leaf_vertex) != list(range(t.num_vertices)):
        raise AssertionError("contracted clusters do not hold one leaf each")
    colors = [""] * t.num_vertices
    for (_, side, _), v in zip(lv, leaf_vertex):
        colors[v] = "W" if side == "L" else "B"
    lefts = [v for (_, side, act), v in zip(lv, leaf_vertex) if act and side == "L"]
    rights = [v for (_, side, act), v in zip(lv, leaf_vertex) if act and side == "R"]
    return t, "".join(colors), lefts, rights


def theta_lambda1_tagged(w: str) -> TaggedTree:
    """theta of the tree-code; left vertices white, right vertices black,
    active rights listed in reverse appearance order."""
    t, colors, lefts, rights = _theta_lambda1(w)
    return TaggedTree(t, colors, tuple(lefts), tuple(reversed(rights)))


def theta_lambda1_lr(w: str) -> TaggedTree:
    """Same tree with active lefts and rights both in appearance order."""
    t, colors, lefts, rights = _theta_lambda1(w)
    return TaggedTree(t, colors, tuple(lefts), tuple(rights))


def check_prop_lambda1(w: str) -> bool:
    return partition_tree(w) == theta_lambda1_tagged(w)


def evolve_partition_tree(pt: TaggedTree, c: str) -> TaggedTree:
    """a: leftmost son of the last active white, becoming the last active black.
    b: rightmost son of the last active black, becoming the last active white.
    A / B: inactivate the last active black / white."""
    if c == "a":
        t, leaf, _ = pt.add_leaf(pt.white_order[-1], True, "B")
        return TaggedTree(t.tree, t.colors, t.white_order, t.black_order + (leaf,))
    if c == "b":
        t, leaf, _ = pt.add_leaf(pt.black_order[-1], False, "W")
        return TaggedTree(t.tree, t.colors, t.white_order + (leaf,), t.black_order)
    if c == "A":
        return TaggedTree(pt.tree, pt.colors, pt.white_order, pt.black_order[:-1])
    return TaggedTree(pt.tree, pt.colors, pt.white_order[:-1], pt.black_order)


def evolve_theta_lambda1(tt: TaggedTree, c: str) -> TaggedTree:
    """Same moves phrased on left/right vertices in appearance order.

    a: leftmost son of the last active left, becoming the first active right.
    b: rightmost son of the first active right, becoming the last active left.
    A / B: inactivate the first active right / last active left.
    """
    if c == "a":
        t, leaf, _ = tt.add_leaf(tt.white_order[-1], True, "B")
        return TaggedTree(t.tree, t.colors, t.white_order, (leaf,) + t.black_order)
    if c == "b":
        t, leaf, _ = tt.add_leaf(tt.black_order[0], False, "W")
        return TaggedTree(t.tree, t.colors, t.white_order + (leaf,), t.black_order)
    if c == "A":
        return TaggedTree(tt.tree, tt.colors, tt.white_order, tt.black_order[1:])
    return TaggedTree(tt.tree, tt.colors, tt.white_order[:-1], tt.black_order)


def partition_tree_evolution_check(w: str, c: str) -> bool:
    return evolve_partition_tree(partition_tree(w), c) == partition_tree(w + c)


def theta_lambda1_evolution_check(w: str, c: str) -> bool:
    return evolve_theta_lambda1(theta_lambda1_lr(w), c) == theta_lambda1_lr(w + c)


def extensions(w: str):
    """Letters that keep ``w`` a prefix-shuffle."""
    out = "ab"
    if w.count("a") > w.count("A"):
        out += "A"
    if w.count("b") > w.count("B"):
        out += "B"
    return out
