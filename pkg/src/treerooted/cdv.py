"""The leaf-code / tree-code pair (lambda0, lambda1) of a prefix-shuffle and its inverse."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .catalan import (
    B1,
    TAU,
    BinaryTree,
    InvalidTree,
    Leaf,
    Node,
    PlaneTree,
    deactivate_all,
    leaves,
    num_nodes,
    replace_at,
    set_activity,
)
from .words import require_paren_shuffle, require_prefix_shuffle


class IncompleteWord(ValueError):
    pass


class InvalidPair(ValueError):
    pass


class InvalidTreeSequence(ValueError):
    pass


# ---------------------------------------------------------------------------
# sigma: graft T1 as the last subtree of T2's root-vertex
# ---------------------------------------------------------------------------


def sigma(t1: PlaneTree, t2: PlaneTree) -> PlaneTree:
    return PlaneTree(t2.word + "a" + t1.word + "A")


def sigma_inv(t: PlaneTree) -> tuple[PlaneTree, PlaneTree]:
    if t.size == 0:
        raise InvalidTree("sigma_inv needs a tree with at least one edge")
    kids = t.children()
    return kids[-1], PlaneTree.from_children(kids[:-1])


# ---------------------------------------------------------------------------
# Tree-sequences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TreeSequence:
    """``letters[0] trees[0] letters[1] ... trees[k-1] letters[k]``."""

    letters: str
    trees: tuple[PlaneTree, ...]

    def __post_init__(self):
        if len(self.letters) != len(self.trees) + 1:
            raise InvalidTreeSequence("need exactly one tree between consecutive letters")
        if not re.fullmatch(r"u+v+", self.letters):
            raise InvalidTreeSequence(f"letters must be u...uv...v, got {self.letters!r}")

    @property
    def num_u(self) -> int:
        return self.letters.count("u")

    @property
    def num_v(self) -> int:
        return self.letters.count("v")

    @property
    def boundary(self) -> int:
        """Index of the tree between the last u and the first v."""
        return self.num_u - 1

    def total_edges(self) -> int:
        return sum(t.size for t in self.trees)

    def __str__(self) -> str:
        out = [self.letters[0]]
        for t, c in zip(self.trees, self.letters[1:]):
            out.append(f"[{t.word}]{c}")
        return "".join(out)

    @classmethod
    def parse(cls, s: str) -> "TreeSequence":
        m = re.fullmatch(r"([uv])((?:\[[aA]*\][uv])*)", s.strip())
        if not m:
            raise InvalidTreeSequence(f"cannot parse tree-sequence {s!r}")
        pairs = re.findall(r"\[([aA]*)\]([uv])", m.group(2))
        return cls(m.group(1) + "".join(c for _, c in pairs), tuple(PlaneTree(t) for t, _ in pairs))


INITIAL_SEQUENCE = TreeSequence("uv", (TAU,))


def _step0(s: TreeSequence, c: str) -> TreeSequence:
    p = s.num_u
    trees = list(s.trees)
    if c == "a":
        trees.insert(p - 1, TAU)
        return TreeSequence("u" * p + "v" * (s.num_v + 1), tuple(trees))
    if c == "b":
        trees.insert(p, TAU)
        return TreeSequence("u" * (p + 1) + "v" * s.num_v, tuple(trees))
    if c == "A":
        # around the first v
        trees[p - 1 : p + 1] = [sigma(trees[p - 1], trees[p])]
        return TreeSequence("u" * p + "v" * (s.num_v - 1), tuple(trees))
    # "B": around the last u
    trees[p - 2 : p] = [sigma(trees[p - 2], trees[p - 1])]
    return TreeSequence("u" * (p - 1) + "v" * s.num_v, tuple(trees))


def lambda0_steps(w: str) -> list[TreeSequence]:
    require_prefix_shuffle(w)
    out = [INITIAL_SEQUENCE]
    for c in w:
        out.append(_step0(out[-1], c))
    return out


def lambda0(w: str) -> TreeSequence:
    return lambda0_steps(w)[-1]


def lambda0_prime(w: str) -> PlaneTree:
    s = lambda0(w)
    if s.letters != "uv":
        raise IncompleteWord(f"{w!r} leaves {s.num_u} u and {s.num_v} v")
    return s.trees[0]


# ---------------------------------------------------------------------------
# lambda1: binary trees with active leaves
# ---------------------------------------------------------------------------


def _active(b: BinaryTree, side: str) -> list[tuple[int, ...]]:
    return [p for p, sd, act in leaves(b) if act and sd == side]


def _step1(b: BinaryTree, c: str) -> BinaryTree:
    if c == "a":
        return replace_at(b, _active(b, "L")[-1], B1)
    if c == "b":
        return replace_at(b, _active(b, "R")[0], B1)
    if c == "A":
        return set_activity(b, _active(b, "R")[0], False)
    return set_activity(b, _active(b, "L")[-1], False)


def lambda1_steps(w: str) -> list[BinaryTree]:
    require_prefix_shuffle(w)
    out: list[BinaryTree] = [B1]
    for c in w:
        out.append(_step1(out[-1], c))
    return out


def lambda1(w: str) -> BinaryTree:
    return lambda1_steps(w)[-1]


def lambda1_prime(w: str) -> BinaryTree:
    require_paren_shuffle(w)
    return deactivate_all(lambda1(w))


def lambda_(w: str) -> tuple[PlaneTree, BinaryTree]:
    return lambda0_prime(w), lambda1_prime(w)


# ---------------------------------------------------------------------------
# Inverse by peeling the last letter
# ---------------------------------------------------------------------------


def pair_violations(s: TreeSequence, b: BinaryTree) -> list[str]:
    """Reasons why ``(s, b)`` cannot be ``(lambda0(w), lambda1(w))``."""
    out = []
    lv = leaves(b)
    act = [(i, sd) for i, (_, sd, a) in enumerate(lv) if a]
    sides = "".join(sd for _, sd in act)
    if not re.fullmatch(r"L*R*", sides):
        out.append("an active right leaf precedes an active left leaf")
    if sides.count("L") != s.num_u or sides.count("R") != s.num_v:
        out.append(
            f"{sides.count('L')} active left / {sides.count('R')} active right leaves "
            f"but {s.num_u} u / {s.num_v} v"
        )
    elif any(j - i - 1 != t.size for (i, _), (j, _), t in zip(act, act[1:], s.trees)):
        out.append("inactive leaf counts between actives differ from tree sizes")
    elif act and (act[0][0] != 0 or act[-1][0] != len(lv) - 1):
        out.append("first and last leaves must be active")
    return out


def _father_if_sibling_actives(b: BinaryTree, left: tuple[int, ...], right: tuple[int, ...]):
    if left[:-1] == right[:-1] and left[-1] == 0 and right[-1] == 1:
        return left[:-1]
    return None


def lambda_inv_prefix(s: TreeSequence, b: BinaryTree) -> str:
    """The prefix-shuffle ``w`` with ``lambda0(w) = s`` and ``lambda1(w) = b``."""
    out: list[str] = []
    budget = 2 * (num_nodes(b) + s.total_edges()) + 2
    while True:
        bad = pair_violations(s, b)
        if bad:
            raise InvalidPair("; ".join(bad))
        if s == INITIAL_SEQUENCE and b == B1:
            break
        budget -= 1
        if budget < 0:
            raise InvalidPair("peeling does not terminate")
        last_l = _active(b, "L")[-1]
        first_r = _active(b, "R")[0]
        father = _father_if_sibling_actives(b, last_l, first_r)
        p = s.num_u
        trees = list(s.trees)
        if father is not None and father != ():
            if trees[p - 1] != TAU:
                raise InvalidPair("sibling active leaves but no u-tau-v at the boundary")
            del trees[p - 1]
            b = replace_at(b, father, Leaf(True))
            if father[-1] == 0:
                out.append("a")
                s = TreeSequence("u" * p + "v" * (s.num_v - 1), tuple(trees))
            else:
                out.append("b")
                s = TreeSequence("u" * (p - 1) + "v" * s.num_v, tuple(trees))
            continue
        t = trees[p - 1]
        if t.size == 0:
            raise InvalidPair("empty boundary tree with no sibling active leaves")
        t1, t2 = sigma_inv(t)
        lv = leaves(b)
        idx = [q for q, _, _ in lv].index(last_l) + t1.size + 1
        path, side, _ = lv[idx]
        b = set_activity(b, path, True)
        trees[p - 1 : p] = [t1, t2]
        if side == "R":
            out.append("A")
            s = TreeSequence("u" * p + "v" * (s.num_v + 1), tuple(trees))
        else:
            out.append("B")
            s = TreeSequence("u" * (p + 1) + "v" * s.num_v, tuple(trees))
    return "".join(reversed(out))


def lambda_inv(t: PlaneTree, b: BinaryTree) -> str:
    """The parenthesis-shuffle with ``lambda_(w) == (t, b)``."""
    if num_nodes(b) != t.size + 1:
        raise InvalidPair(f"tree of size {t.size} needs a binary tree with {t.size + 1} nodes")
    if any(a for _, _, a in leaves(b)):
        raise InvalidPair("binary tree must have only inactive leaves")
    lv = leaves(b)
    b = set_activity(b, lv[0][0], True)
    b = set_activity(b, lv[-1][0], True)
    return lambda_inv_prefix(TreeSequence("uv", (t,)), b)
