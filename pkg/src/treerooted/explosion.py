"""Vertex explosion: tree-oriented map <-> (plane tree, non-crossing partition)."""

from __future__ import annotations

from .catalan import NonCrossingPartition, PlaneTree
from .orientation import delta, gamma, is_tree_orientation
from .planar_map import OrientedMap, RootedMap, TreeRootedMap


class NotTreeOriented(ValueError):
    pass


class SizeMismatch(ValueError):
    pass


def explode(sigma, alpha, heads, skip=frozenset()) -> list[int]:
    """Rotation after explosion.

    Each head keeps the run of tails lying just before it counterclockwise,
    i.e. the tails whose first head counterclockwise it is.  Half-edges in
    ``skip`` are treated as deleted and left as fixed points.
    """
    n = len(sigma)
    new = list(range(n))
    done = [x in skip for x in range(n)]
    for s in range(n):
        if done[s]:
            continue
        cyc = []
        x = s
        while not done[x]:
            done[x] = True
            cyc.append(x)
            x = sigma[x]
            while x in skip:
                x = sigma[x]
        hpos = [i for i, y in enumerate(cyc) if y in heads]
        if not hpos:
            raise NotTreeOriented(f"vertex {cyc} has no head")
        # rotate so that the cycle ends with a head
        k = hpos[-1] + 1
        cyc = cyc[k:] + cyc[:k]
        block: list[int] = []
        for y in cyc:
            if y in heads:
                ring = [y] + block
                for a, b in zip(ring, ring[1:] + ring[:1]):
                    new[a] = b
                block = []
            else:
                block.append(y)
    return new


def tree_tour(sigma2, alpha, root, heads):
    """Tour of the exploded tree: (word, heads in first-corner order)."""
    word = []
    order = [root]
    h = sigma2[root]
    while h != root:
        if h in heads:
            word.append("A")
        else:
            word.append("a")
            order.append(alpha[h])
        h = sigma2[alpha[h]]
    return "".join(word), order


def phi(om: OrientedMap, check: bool = True) -> tuple[PlaneTree, NonCrossingPartition]:
    if check and not is_tree_orientation(om):
        raise NotTreeOriented("input orientation is not a tree-orientation")
    m = om.map
    sigma2 = explode(m.sigma, m.alpha, om.heads)
    word, order = tree_tour(sigma2, m.alpha, m.root, om.heads)
    if len(order) != m.size + 1:
        raise NotTreeOriented("explosion did not produce a tree")
    vid = m.vertex_of()
    return PlaneTree(word), NonCrossingPartition.from_blocks([vid[h] for h in order])


def phi0(om: OrientedMap) -> PlaneTree:
    return phi(om, check=False)[0]


def phi1(om: OrientedMap) -> NonCrossingPartition:
    return phi(om, check=False)[1]


def tree_rotation(t: PlaneTree):
    """Half-edge model of a plane tree oriented from the root.

    Returns ``(alpha, heads, rot)`` where ``rot[i]`` lists the half-edges of
    the i-th vertex (first-corner order) counterclockwise starting with its
    head; half-edge 0 is the root.
    """
    alpha = [0]
    rot: list[list[int]] = [[0]]
    heads = [0]
    stack = [0]
    for c in t.word:
        if c == "a":
            x, y = len(alpha), len(alpha) + 1
            alpha += [y, x]
            rot[stack[-1]].append(x)
            rot.append([y])
            heads.append(y)
            stack.append(len(rot) - 1)
        else:
            stack.pop()
    return alpha, heads, rot


def psi(t: PlaneTree, p: NonCrossingPartition) -> OrientedMap:
    """Merge the vertices of each part.

    The merged rotation lists, for each member in decreasing order, its
    tails counterclockwise from its head and then the head itself, so every
    tail still sees its own head first.
    """
    if p.n != t.size + 1:
        raise SizeMismatch(f"partition of size {p.n} needs a tree of size {p.n - 1}, got {t.size}")
    alpha, heads, rot = tree_rotation(t)
    sigma = [0] * len(alpha)
    for part in p.parts:
        ring = []
        for v in reversed(part):
            r = rot[v - 1]
            ring.extend(r[1:])
            ring.append(r[0])
        for a, b in zip(ring, ring[1:] + ring[:1]):
            sigma[a] = b
    return OrientedMap(RootedMap(tuple(sigma), tuple(alpha), 0), frozenset(heads))


def big_phi(mt: TreeRootedMap) -> tuple[PlaneTree, NonCrossingPartition]:
    return phi(delta(mt), check=False)


def big_phi_inv(t: PlaneTree, p: NonCrossingPartition) -> TreeRootedMap:
    return gamma(psi(t, p))
