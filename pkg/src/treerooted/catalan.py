"""Catalan families: plane trees, binary trees, non-crossing partitions.

Plane trees are identified with their balanced ``a/A`` word (``a`` the
first time an edge is followed during the counterclockwise tour, ``A`` the
second time).  Binary trees carry an activity flag on each leaf.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from .words import catalan, is_paren_system


class InvalidTree(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


# ---------------------------------------------------------------------------
# Plane trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class PlaneTree:
    word: str = ""

    def __post_init__(self):
        if not is_paren_system(self.word):
            raise InvalidTree(f"not a parenthesis system: {self.word!r}")

    @property
    def size(self) -> int:
        return len(self.word) // 2

    @property
    def num_vertices(self) -> int:
        return self.size + 1

    def children(self) -> list["PlaneTree"]:
        """Subtrees hanging from the root-vertex, in tour order."""
        out, depth, start = [], 0, 0
        for i, c in enumerate(self.word):
            depth += 1 if c == "a" else -1
            if depth == 0:
                out.append(PlaneTree(self.word[start + 1 : i]))
                start = i + 1
        return out

    @classmethod
    def from_children(cls, kids) -> "PlaneTree":
        return cls("".join("a" + k.word + "A" for k in kids))

    def parents(self) -> list[int]:
        """Parent of each vertex in preorder (vertex 0 is the root-vertex, parent -1)."""
        par, stack = [-1], [0]
        for c in self.word:
            if c == "a":
                par.append(stack[-1])
                stack.append(len(par) - 1)
            else:
                stack.pop()
        return par

    def depths(self) -> list[int]:
        d = [0]
        depth = 0
        for c in self.word:
            if c == "a":
                depth += 1
                d.append(depth)
            else:
                depth -= 1
        return d

    def __str__(self) -> str:
        return self.word


TAU = PlaneTree("")


def tree_to_word(t: PlaneTree) -> str:
    return t.word


def word_to_tree(w: str) -> PlaneTree:
    return PlaneTree(w)


def enumerate_trees(n: int) -> Iterator[PlaneTree]:
    """Plane trees with ``n`` edges, in lexicographic order of words (a < A)."""

    def rec(prefix: str, opened: int, closed: int):
        if opened == closed == n:
            yield PlaneTree(prefix)
            return
        if opened < n:
            yield from rec(prefix + "a", opened + 1, closed)
        if closed < opened:
            yield from rec(prefix + "A", opened, closed + 1)

    return rec("", 0, 0)


# ---------------------------------------------------------------------------
# Non-crossing partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NonCrossingPartition:
    n: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        parts = tuple(sorted((tuple(sorted(p)) for p in self.parts), key=lambda p: p[0] if p else 0))
        object.__setattr__(self, "parts", parts)
        seen = sorted(x for p in parts for x in p)
        if any(not p for p in parts) or seen != list(range(1, self.n + 1)):
            raise InvalidPartition(f"parts do not partition 1..{self.n}: {parts}")
        if not _is_noncrossing(self.block_index()):
            raise InvalidPartition(f"crossing parts: {parts}")

    @classmethod
    def from_blocks(cls, block_of) -> "NonCrossingPartition":
        """Build from a sequence giving a block label per element 1..n."""
        groups: dict = {}
        for i, b in enumerate(block_of, start=1):
            groups.setdefault(b, []).append(i)
        return cls(len(block_of), tuple(tuple(g) for g in groups.values()))

    def block_index(self) -> list[int]:
        """Block number (parts ordered by minimum) of each element, 0-based list."""
        idx = [0] * self.n
        for k, p in enumerate(self.parts):
            for x in p:
                idx[x - 1] = k
        return idx

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, p)) + "}" for p in self.parts) + "}"


def _is_noncrossing(block: list[int]) -> bool:
    """Stack scan: crossing iff some part is re-entered after another part opened inside it."""
    n = len(block)
    last = {}
    for i, b in enumerate(block):
        last[b] = i
    stack: list[int] = []
    for i, b in enumerate(block):
        if stack and stack[-1] == b:
            pass
        elif b in stack:
            return False
        else:
            stack.append(b)
        if last[b] == i:
            stack.pop()
    return True


def is_noncrossing_bruteforce(block: list[int]) -> bool:
    n = len(block)
    for a, b, c, d in itertools.combinations(range(n), 4):
        if block[a] == block[c] and block[b] == block[d] and block[a] != block[b]:
            return False
    return True


def enumerate_ncps(n: int) -> Iterator[NonCrossingPartition]:
    """Non-crossing partitions of 1..n via restricted growth strings, filtered."""

    def rgs(prefix: list[int], mx: int):
        if len(prefix) == n:
            yield list(prefix)
            return
        for b in range(mx + 2):
            prefix.append(b)
            yield from rgs(prefix, max(mx, b))
            prefix.pop()

    if n == 0:
        yield NonCrossingPartition(0, ())
        return
    for s in rgs([0], 0):
        if _is_noncrossing(s):
            yield NonCrossingPartition.from_blocks(s)


def upsilon_inv(t: PlaneTree) -> NonCrossingPartition:
    """Tree -> non-crossing partition.

    Odd-depth vertices are the parts, even-depth ones the anti-parts.  Each
    time the tour leaves an odd-depth vertex it passes one element of that
    vertex's part; elements are numbered from the end of the tour, so the
    last departure is element 1.
    """
    stack = [(0, 0)]  # (vertex id, depth)
    next_id = 1
    block = []
    for c in t.word:
        v, d = stack[-1]
        if c == "a":
            if d % 2 == 1:
                block.append(v)
            stack.append((next_id, d + 1))
            next_id += 1
        else:
            stack.pop()
            if d % 2 == 1:
                block.append(v)
    return NonCrossingPartition.from_blocks(block[::-1])


def upsilon(p: NonCrossingPartition) -> PlaneTree:
    """Non-crossing partition -> tree (dual of the half-plane cell picture)."""
    block = p.block_index()[::-1]
    members: dict[int, list[int]] = {}
    for i, b in enumerate(block, start=1):
        members.setdefault(b, []).append(i)

    def span(lo: int, hi: int) -> str:
        # anti-part covering elements lo..hi: one child per outermost part
        out = []
        i = lo
        while i <= hi:
            part = members[block[i - 1]]
            inner = "".join("a" + span(x + 1, y - 1) + "A" for x, y in zip(part, part[1:]))
            out.append("a" + inner + "A")
            i = part[-1] + 1
        return "".join(out)

    return PlaneTree(span(1, p.n))


# ---------------------------------------------------------------------------
# Binary trees with leaf activity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    active: bool = False


@dataclass(frozen=True)
class Node:
    left: "BinaryTree"
    right: "BinaryTree"


BinaryTree = Union[Leaf, Node]

B1 = Node(Leaf(True), Leaf(True))


def num_nodes(b: BinaryTree) -> int:
    return 0 if isinstance(b, Leaf) else 1 + num_nodes(b.left) + num_nodes(b.right)


def leaves(b: BinaryTree) -> list[tuple[tuple[int, ...], str, bool]]:
    """Leaves in order of appearance: (path of 0=left/1=right, side 'L'/'R', active).

    The root-vertex is always a node, so every leaf is a left or right son.
    """
    out = []

    def rec(x, path, side):
        if isinstance(x, Leaf):
            out.append((path, side, x.active))
        else:
            rec(x.left, path + (0,), "L")
            rec(x.right, path + (1,), "R")

    if isinstance(b, Leaf):
        raise InvalidTree("binary tree must have a root node")
    rec(b, (), "")
    return out


def replace_at(b: BinaryTree, path: tuple[int, ...], new: BinaryTree) -> BinaryTree:
    if not path:
        return new
    if path[0] == 0:
        return Node(replace_at(b.left, path[1:], new), b.right)
    return Node(b.left, replace_at(b.right, path[1:], new))


def set_activity(b: BinaryTree, path: tuple[int, ...], active: bool) -> BinaryTree:
    return replace_at(b, path, Leaf(active))


def deactivate_all(b: BinaryTree) -> BinaryTree:
    if isinstance(b, Leaf):
        return Leaf(False)
    return Node(deactivate_all(b.left), deactivate_all(b.right))


def binary_to_word(b: BinaryTree) -> str:
    """Preorder serialization over tokens N, La, Li, Ra, Ri."""
    parts: list[str] = []

    def rec(x, side):
        if isinstance(x, Leaf):
            parts.append(side + ("a" if x.active else "i"))
        else:
            parts.append("N")
            rec(x.left, "L")
            rec(x.right, "R")

    if isinstance(b, Leaf):
        raise InvalidTree("binary tree must have a root node")
    rec(b, "")
    return "".join(parts)


def word_to_binary(s: str) -> BinaryTree:
    pos = 0

    def rec(side: str):
        nonlocal pos
        if pos >= len(s):
            raise InvalidTree(f"truncated binary tree word {s!r}")
        if s[pos] == "N":
            pos += 1
            left = rec("L")
            right = rec("R")
            return Node(left, right)
        tok = s[pos : pos + 2]
        if len(tok) != 2 or tok[0] != side or tok[1] not in "ai":
            raise InvalidTree(f"bad token {tok!r} at {pos} in {s!r} (expected side {side or 'N'})")
        pos += 2
        return Leaf(tok[1] == "a")

    if not s.startswith("N"):
        raise InvalidTree(f"binary tree word must start with N: {s!r}")
    b = rec("")
    if pos != len(s):
        raise InvalidTree(f"trailing characters in binary tree word {s!r}")
    return b


def enumerate_binary_trees(n: int) -> Iterator[BinaryTree]:
    """Binary trees with ``n`` >= 1 nodes, all leaves inactive.

    ``n == 0`` yields nothing: a binary tree here always has a root node.
    """

    def rec(k: int):
        if k == 0:
            yield Leaf(False)
            return
        for i in range(k):
            for left in rec(i):
                for right in rec(k - 1 - i):
                    yield Node(left, right)

    if n == 0:
        return iter(())
    return rec(n)


# ---------------------------------------------------------------------------
# theta: contraction of non-branching edges
# ---------------------------------------------------------------------------


def branching_edges(b: BinaryTree) -> set[tuple[int, ...]]:
    """Branching edges, each named by the path of its child endpoint.

    An edge is branching when one endpoint is a right son and the other a
    left son or the root-vertex.
    """
    out = set()

    def rec(x, path, kind):
        # kind of x: 'root', 'L' or 'R'
        if isinstance(x, Leaf):
            return
        for bit, child in ((0, x.left), (1, x.right)):
            ck = "L" if bit == 0 else "R"
            kinds = {kind, ck}
            if "R" in kinds and ("L" in kinds or "root" in kinds):
                out.add(path + (bit,))
            rec(child, path + (bit,), ck)

    rec(b, (), "root")
    return out


def is_branching_edge(b: BinaryTree, child_path: tuple[int, ...]) -> bool:
    return tuple(child_path) in branching_edges(b)


def theta_with_leaves(b: BinaryTree) -> tuple[PlaneTree, list[int]]:
    """Contract non-branching edges.

    Returns the tree and, for each leaf in appearance order, the preorder
    index of the contracted vertex containing it.
    """
    br = branching_edges(b)
    word: list[str] = []
    leaf_vertex: list[int] = []
    counter = 0

    def rec(x, path, vertex):
        nonlocal counter
        if isinstance(x, Leaf):
            leaf_vertex.append(vertex)
            return
        for bit, child in ((0, x.left), (1, x.right)):
            cp = path + (bit,)
            if cp in br:
                counter += 1
                word.append("a")
                rec(child, cp, counter)
                word.append("A")
            else:
                rec(child, cp, vertex)

    rec(b, (), 0)
    return PlaneTree("".join(word)), leaf_vertex


def theta(b: BinaryTree) -> PlaneTree:
    return theta_with_leaves(b)[0]


def big_theta(b: BinaryTree) -> NonCrossingPartition:
    return upsilon_inv(theta(b))


__all__ = [
    "PlaneTree", "TAU", "NonCrossingPartition", "Leaf", "Node", "BinaryTree", "B1",
    "InvalidTree", "InvalidPartition", "tree_to_word", "word_to_tree", "enumerate_trees",
    "enumerate_ncps", "enumerate_binary_trees", "upsilon", "upsilon_inv", "theta",
    "big_theta", "theta_with_leaves", "branching_edges", "is_branching_edge", "leaves",
    "binary_to_word", "word_to_binary", "num_nodes", "deactivate_all", "catalan",
]
